#include "peirce/finring.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>
#include <utility>

#include "peirce/error.hpp"

namespace peirce {

  std::string_view to_string(Side side) noexcept {
    return side == Side::left ? "left" : "right";
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteRing
  ////////////////////////////////////////////////////////////////////////

  struct FiniteRing::Impl {
    RingSpec      spec;
    std::uint64_t order = 1;
    // nonzero (k, c[i][j][k]) for every basis pair (i, j)
    std::vector<std::vector<std::pair<std::size_t, Coord>>> sparse;
  };

  namespace {
    std::shared_ptr<FiniteRing::Impl const> build_impl(RingSpec spec) {
      auto        impl = std::make_shared<FiniteRing::Impl>();
      std::size_t n    = spec.rank;
      if (spec.labels.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
          spec.labels.push_back("b" + std::to_string(i));
        }
      }
      impl->sparse.resize(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            Coord c = spec.constants[(i * n + j) * n + k];
            if (c != 0) {
              impl->sparse[i * n + j].emplace_back(k, c);
            }
          }
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        impl->order *= static_cast<std::uint64_t>(spec.modulus);
      }
      impl->spec = std::move(spec);
      return impl;
    }

    void check_same(FiniteRing const& a, FiniteRing const& b) {
      if (!a.same_as(b)) {
        throw Error(ErrorKind::RingMismatch,
                    "operands are bound to different rings");
      }
    }
  }  // namespace

  FiniteRing::FiniteRing(std::shared_ptr<Impl const> impl)
      : _impl(std::move(impl)) {}

  Coord FiniteRing::modulus() const noexcept {
    return _impl->spec.modulus;
  }

  std::size_t FiniteRing::rank() const noexcept {
    return _impl->spec.rank;
  }

  std::vector<std::string> const& FiniteRing::labels() const noexcept {
    return _impl->spec.labels;
  }

  RingSpec const& FiniteRing::spec() const noexcept {
    return _impl->spec;
  }

  std::uint64_t FiniteRing::order() const noexcept {
    return _impl->order;
  }

  Coord FiniteRing::constant(std::size_t i,
                             std::size_t j,
                             std::size_t k) const noexcept {
    std::size_t n = rank();
    return _impl->spec.constants[(i * n + j) * n + k];
  }

  Vec FiniteRing::multiply(Vec const& x, Vec const& y) const {
    std::size_t const n = rank();
    Coord const       m = modulus();
    Vec               acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) {
          continue;
        }
        Coord t = (x[i] * y[j]) % m;
        for (auto [k, c] : _impl->sparse[i * n + j]) {
          acc[k] += t * c;
        }
      }
    }
    for (auto& a : acc) {
      a %= m;
    }
    return acc;
  }

  Vec FiniteRing::add(Vec const& x, Vec const& y) const {
    Vec r(x);
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] = (r[i] + y[i]) % modulus();
    }
    return r;
  }

  Vec FiniteRing::negate(Vec const& x) const {
    Vec r(x);
    for (auto& a : r) {
      a = zmod::reduce(-a, modulus());
    }
    return r;
  }

  Vec FiniteRing::basis_vector(std::size_t i) const {
    Vec v(rank(), 0);
    v[i] = 1 % modulus();
    return v;
  }

  Vec FiniteRing::zero_vector() const {
    return Vec(rank(), 0);
  }

  Element FiniteRing::element(Vec coords) const {
    return Element(*this, std::move(coords));
  }

  Element FiniteRing::basis(std::size_t i) const {
    if (i >= rank()) {
      throw Error(ErrorKind::ShapeMismatch,
                  "basis index " + std::to_string(i) + " out of range");
    }
    return Element(*this, basis_vector(i));
  }

  Element FiniteRing::zero() const {
    return Element(*this, zero_vector());
  }

  FiniteRing make_ring_unchecked(RingSpec spec) {
    return FiniteRing(build_impl(std::move(spec)));
  }

  FiniteRing make_ring(RingSpec spec) {
    Coord const       m = spec.modulus;
    std::size_t const n = spec.rank;
    if (m < 2) {
      throw Error(ErrorKind::ModulusTooSmall,
                  "modulus " + std::to_string(m) + " is smaller than 2");
    }
    if (m > 65536) {
      throw Error(ErrorKind::ParameterOutOfRange,
                  "modulus " + std::to_string(m) + " exceeds 65536");
    }
    if (n < 1) {
      throw Error(ErrorKind::ShapeMismatch, "rank must be at least 1");
    }
    if (static_cast<double>(n) * std::log2(static_cast<double>(m)) > 62.0) {
      throw Error(ErrorKind::ParameterOutOfRange,
                  "ring order m^n does not fit in 62 bits");
    }
    if (spec.constants.size() != n * n * n) {
      throw Error(ErrorKind::ShapeMismatch,
                  "expected " + std::to_string(n * n * n)
                      + " structure constants, got "
                      + std::to_string(spec.constants.size()));
    }
    if (!spec.labels.empty() && spec.labels.size() != n) {
      throw Error(ErrorKind::ShapeMismatch,
                  "expected " + std::to_string(n) + " labels, got "
                      + std::to_string(spec.labels.size()));
    }
    for (std::size_t idx = 0; idx < spec.constants.size(); ++idx) {
      Coord c = spec.constants[idx];
      if (c < 0 || c >= m) {
        throw Error(ErrorKind::ParameterOutOfRange,
                    "structure constant #" + std::to_string(idx) + " = "
                        + std::to_string(c) + " is not in [0, m)");
      }
    }
    auto c = [&](std::size_t i, std::size_t j, std::size_t k) {
      return spec.constants[(i * n + j) * n + k];
    };
    Vec lhs(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          // (b_i b_j) b_k = sum_l c_ijl b_l b_k ; b_i (b_j b_k) = sum_l c_jkl b_i b_l
          std::fill(lhs.begin(), lhs.end(), 0);
          std::fill(rhs.begin(), rhs.end(), 0);
          for (std::size_t l = 0; l < n; ++l) {
            Coord a = c(i, j, l), b = c(j, k, l);
            for (std::size_t t = 0; t < n; ++t) {
              if (a != 0) {
                lhs[t] = (lhs[t] + a * c(l, k, t)) % m;
              }
              if (b != 0) {
                rhs[t] = (rhs[t] + b * c(i, l, t)) % m;
              }
            }
          }
          if (lhs != rhs) {
            throw Error(ErrorKind::NotAssociative,
                        "(b" + std::to_string(i) + " b" + std::to_string(j)
                            + ") b" + std::to_string(k) + " != b"
                            + std::to_string(i) + " (b" + std::to_string(j)
                            + " b" + std::to_string(k) + ")");
          }
        }
      }
    }
    return FiniteRing(build_impl(std::move(spec)));
  }

  FiniteRing make_ring(Coord                    modulus,
                       std::size_t              rank,
                       std::vector<Coord>       constants,
                       std::vector<std::string> labels) {
    return make_ring(
        RingSpec{modulus, rank, std::move(labels), std::move(constants)});
  }

  ////////////////////////////////////////////////////////////////////////
  // Element
  ////////////////////////////////////////////////////////////////////////

  Element::Element(FiniteRing ring, Vec coords)
      : _ring(std::move(ring)), _coords(std::move(coords)) {
    if (_coords.size() != _ring.rank()) {
      throw Error(ErrorKind::ShapeMismatch,
                  "element has " + std::to_string(_coords.size())
                      + " coordinates, ring rank is "
                      + std::to_string(_ring.rank()));
    }
    for (auto& x : _coords) {
      x = zmod::reduce(x, _ring.modulus());
    }
  }

  Element Element::operator+(Element const& other) const {
    check_same(_ring, other._ring);
    return Element(_ring, _ring.add(_coords, other._coords));
  }

  Element Element::operator-(Element const& other) const {
    check_same(_ring, other._ring);
    return Element(_ring, _ring.add(_coords, _ring.negate(other._coords)));
  }

  Element Element::operator-() const {
    return Element(_ring, _ring.negate(_coords));
  }

  Element Element::operator*(Element const& other) const {
    check_same(_ring, other._ring);
    return Element(_ring, _ring.multiply(_coords, other._coords));
  }

  Element Element::scaled(Coord factor) const {
    Vec v(_coords);
    for (auto& x : v) {
      x = zmod::reduce(x * zmod::reduce(factor, _ring.modulus()),
                       _ring.modulus());
    }
    return Element(_ring, std::move(v));
  }

  bool operator==(Element const& a, Element const& b) {
    return a._ring.same_as(b._ring) && a._coords == b._coords;
  }

  std::string format(Element const& x) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < x.coords().size(); ++i) {
      out << (i == 0 ? "" : ",") << x.coords()[i];
    }
    out << ']';
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Expr
  ////////////////////////////////////////////////////////////////////////

  Expr Expr::leaf(Element x) {
    Expr e;
    e._op   = Op::leaf;
    e._leaf = std::move(x);
    return e;
  }

  Expr Expr::sum(std::vector<Expr> terms) {
    Expr e;
    e._op       = Op::sum;
    e._children = std::move(terms);
    return e;
  }

  Expr Expr::product(std::vector<Expr> factors) {
    if (factors.empty()) {
      throw Error(ErrorKind::ShapeMismatch,
                  "empty product has no value in a nonunital ring");
    }
    Expr e;
    e._op       = Op::product;
    e._children = std::move(factors);
    return e;
  }

  Expr Expr::negate(Expr term) {
    Expr e;
    e._op = Op::negate;
    e._children.push_back(std::move(term));
    return e;
  }

  Element Expr::evaluate(FiniteRing const& ring) const {
    switch (_op) {
      case Op::leaf:
        check_same(ring, _leaf->ring());
        return *_leaf;
      case Op::sum: {
        Element acc = ring.zero();
        for (auto const& child : _children) {
          acc = acc + child.evaluate(ring);
        }
        return acc;
      }
      case Op::product: {
        Element acc = _children.front().evaluate(ring);
        for (std::size_t i = 1; i < _children.size(); ++i) {
          acc = acc * _children[i].evaluate(ring);
        }
        return acc;
      }
      case Op::negate: return -_children.front().evaluate(ring);
    }
    return ring.zero();
  }

  Element evaluate(FiniteRing const& ring, Expr const& expression) {
    return expression.evaluate(ring);
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroup
  ////////////////////////////////////////////////////////////////////////

  Subgroup::Subgroup(FiniteRing ring, std::vector<Vec> generators)
      : _ring(std::move(ring)) {
    for (auto const& g : generators) {
      if (g.size() != _ring.rank()) {
        throw Error(ErrorKind::ShapeMismatch,
                    "generator length does not match the ring rank");
      }
    }
    _basis = zmod::howell_form(
        std::move(generators), _ring.rank(), _ring.modulus());
    _order = zmod::span_order(_basis, _ring.modulus());
  }

  bool Subgroup::contains(Vec const& v) const {
    return zmod::reduce_against(_basis, v, _ring.modulus());
  }

  bool Subgroup::contains(Element const& x) const {
    check_same(_ring, x.ring());
    return contains(x.coords());
  }

  bool Subgroup::includes(Subgroup const& other) const {
    check_same(_ring, other._ring);
    if (other._order > _order || _order % other._order != 0) {
      return false;
    }
    return std::all_of(other._basis.begin(),
                       other._basis.end(),
                       [this](Vec const& v) { return contains(v); });
  }

  std::optional<Vec> Subgroup::coordinates(Vec const& v) const {
    Vec c;
    if (!zmod::reduce_against(_basis, v, _ring.modulus(), &c)) {
      return std::nullopt;
    }
    return c;
  }

  std::vector<Vec> Subgroup::elements() const {
    Coord const        m = _ring.modulus();
    std::vector<Coord> bound;
    for (auto const& row : _basis) {
      bound.push_back(m / row[zmod::leading_index(row)]);
    }
    std::vector<Vec> out;
    out.reserve(_order);
    Vec counter(_basis.size(), 0);
    while (true) {
      Vec v(_ring.rank(), 0);
      for (std::size_t r = 0; r < _basis.size(); ++r) {
        zmod::add_multiple(v, _basis[r], counter[r], m);
      }
      out.push_back(std::move(v));
      // odometer increment, last row fastest
      std::size_t r = _basis.size();
      while (true) {
        if (r == 0) {
          return out;
        }
        --r;
        if (++counter[r] < bound[r]) {
          break;
        }
        counter[r] = 0;
      }
    }
  }

  std::vector<Coord> Subgroup::key() const {
    std::vector<Coord> k;
    k.reserve(1 + _basis.size() * _ring.rank());
    k.push_back(static_cast<Coord>(_basis.size()));
    for (auto const& row : _basis) {
      k.insert(k.end(), row.begin(), row.end());
    }
    return k;
  }

  bool operator==(Subgroup const& a, Subgroup const& b) {
    return a._ring.same_as(b._ring) && a._basis == b._basis;
  }

  bool canonical_less(Subgroup const& a, Subgroup const& b) {
    if (a.order() != b.order()) {
      return a.order() < b.order();
    }
    return a.key() < b.key();
  }

  Subgroup span_subgroup(FiniteRing const& ring, std::span<Element const> gens) {
    std::vector<Vec> rows;
    for (auto const& g : gens) {
      check_same(ring, g.ring());
      rows.push_back(g.coords());
    }
    return Subgroup(ring, std::move(rows));
  }

  Subgroup zero_subgroup(FiniteRing const& ring) {
    return Subgroup(ring, {});
  }

  Subgroup whole_ring(FiniteRing const& ring) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ring.rank(); ++i) {
      rows.push_back(ring.basis_vector(i));
    }
    return Subgroup(ring, std::move(rows));
  }

  Subgroup subgroup_sum(Subgroup const& a, Subgroup const& b) {
    check_same(a.ring(), b.ring());
    std::vector<Vec> rows(a.basis());
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Subgroup(a.ring(), std::move(rows));
  }

  Subgroup intersect(Subgroup const& a, Subgroup const& b) {
    check_same(a.ring(), b.ring());
    return Subgroup(a.ring(),
                    zmod::intersect(a.basis(),
                                    b.basis(),
                                    a.ring().rank(),
                                    a.ring().modulus()));
  }

  Subgroup subgroup_product(Subgroup const& a, Subgroup const& b) {
    check_same(a.ring(), b.ring());
    FiniteRing const& ring = a.ring();
    std::vector<Vec>  rows;
    rows.reserve(a.basis().size() * b.basis().size());
    for (auto const& x : a.basis()) {
      for (auto const& y : b.basis()) {
        rows.push_back(ring.multiply(x, y));
      }
    }
    return Subgroup(ring, std::move(rows));
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideals and lattices
  ////////////////////////////////////////////////////////////////////////

  Subgroup submodule_closure(FiniteRing const&       ring,
                             std::vector<Vec>        generators,
                             std::vector<Vec> const& actors,
                             Side                    side) {
    Subgroup current(ring, std::move(generators));
    while (true) {
      std::vector<Vec> added;
      for (auto const& h : current.basis()) {
        for (auto const& a : actors) {
          Vec p = side == Side::left ? ring.multiply(a, h)
                                     : ring.multiply(h, a);
          if (!current.contains(p)) {
            added.push_back(std::move(p));
          }
        }
      }
      if (added.empty()) {
        return current;
      }
      std::vector<Vec> rows(current.basis());
      rows.insert(rows.end(),
                  std::make_move_iterator(added.begin()),
                  std::make_move_iterator(added.end()));
      current = Subgroup(ring, std::move(rows));
    }
  }

  namespace {
    std::vector<Vec> basis_vectors(FiniteRing const& ring) {
      std::vector<Vec> out;
      for (std::size_t i = 0; i < ring.rank(); ++i) {
        out.push_back(ring.basis_vector(i));
      }
      return out;
    }

    bool is_closed(Subgroup const&         s,
                   std::vector<Vec> const& actors,
                   Side                    side) {
      FiniteRing const& ring = s.ring();
      for (auto const& h : s.basis()) {
        for (auto const& a : actors) {
          if (!s.contains(side == Side::left ? ring.multiply(a, h)
                                             : ring.multiply(h, a))) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  OneSidedIdeal one_sided_ideal_closure(FiniteRing const&        ring,
                                        std::span<Element const> generators,
                                        Side                     side) {
    std::vector<Vec> rows;
    for (auto const& g : generators) {
      check_same(ring, g.ring());
      rows.push_back(g.coords());
    }
    auto actors = basis_vectors(ring);
    auto closed = submodule_closure(ring, std::move(rows), actors, side);
    bool ok     = is_closed(closed, actors, side);
    return OneSidedIdeal{std::move(closed), side, ok};
  }

  std::optional<std::size_t> SubgroupPoset::index_of(Subgroup const& s) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), s, canonical_less);
    if (it != nodes.end() && *it == s) {
      return static_cast<std::size_t>(it - nodes.begin());
    }
    return std::nullopt;
  }

  SubgroupPoset make_poset(std::vector<Subgroup> nodes) {
    std::sort(nodes.begin(), nodes.end(), canonical_less);
    std::size_t const N     = nodes.size();
    std::size_t const words = (N + 63) / 64;
    using Bits              = std::vector<std::uint64_t>;
    std::vector<Bits> below(N, Bits(words, 0));
    for (std::size_t j = 0; j < N; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (nodes[i].order() < nodes[j].order()
            && nodes[j].includes(nodes[i])) {
          below[j][i / 64] |= std::uint64_t(1) << (i % 64);
        }
      }
    }
    SubgroupPoset poset;
    poset.covers.resize(N);
    std::vector<std::size_t> level(N, 0);
    for (std::size_t j = 0; j < N; ++j) {
      Bits covered(words, 0);
      for (std::size_t k = 0; k < j; ++k) {
        if (below[j][k / 64] >> (k % 64) & 1) {
          for (std::size_t w = 0; w < words; ++w) {
            covered[w] |= below[k][w];
          }
        }
      }
      for (std::size_t i = 0; i < j; ++i) {
        bool in_below   = below[j][i / 64] >> (i % 64) & 1;
        bool in_covered = covered[i / 64] >> (i % 64) & 1;
        if (in_below && !in_covered) {
          poset.covers[i].push_back(j);
          level[j] = std::max(level[j], level[i] + 1);
        }
      }
      poset.height = std::max(poset.height, level[j]);
    }
    poset.nodes = std::move(nodes);
    return poset;
  }

  SubgroupPoset enumerate_submodules(Subgroup const&         ambient,
                                     std::vector<Vec> const& actors,
                                     Side                    side,
                                     std::size_t             cap) {
    FiniteRing const& ring = ambient.ring();
    if (ambient.order() > cap) {
      throw Error(ErrorKind::LatticeTooLarge,
                  "ambient group of order " + std::to_string(ambient.order())
                      + " exceeds the cap " + std::to_string(cap));
    }
    std::map<std::vector<Coord>, std::size_t> principal_index;
    std::vector<Subgroup>                     principal;
    for (auto const& x : ambient.elements()) {
      if (zmod::is_zero(x)) {
        continue;
      }
      auto p = submodule_closure(ring, {x}, actors, side);
      if (!ambient.includes(p)) {
        throw Error(ErrorKind::InvariantViolation,
                    "ambient group is not closed under the acting set");
      }
      if (principal_index.emplace(p.key(), principal.size()).second) {
        principal.push_back(std::move(p));
      }
    }
    std::map<std::vector<Coord>, std::size_t> seen;
    std::vector<Subgroup>                     nodes;
    std::deque<std::size_t>                   queue;
    auto                                      zero = zero_subgroup(ring);
    seen.emplace(zero.key(), 0);
    nodes.push_back(std::move(zero));
    queue.push_back(0);
    while (!queue.empty()) {
      std::size_t current = queue.front();
      queue.pop_front();
      for (auto const& p : principal) {
        if (nodes[current].includes(p)) {
          continue;
        }
        auto joined = subgroup_sum(nodes[current], p);
        if (seen.emplace(joined.key(), nodes.size()).second) {
          nodes.push_back(std::move(joined));
          queue.push_back(nodes.size() - 1);
          if (nodes.size() > cap) {
            throw Error(ErrorKind::LatticeTooLarge,
                        "more than " + std::to_string(cap)
                            + " submodules; raise the cap to continue");
          }
        }
      }
    }
    return make_poset(std::move(nodes));
  }

  IdealLattice enumerate_one_sided_ideals(FiniteRing const& ring,
                                          Side              side,
                                          std::size_t       cap) {
    auto actors = basis_vectors(ring);
    auto poset  = enumerate_submodules(whole_ring(ring), actors, side, cap);
    IdealLattice lattice{ring, side, {}, std::move(poset.covers), poset.height};
    lattice.ideals.reserve(poset.nodes.size());
    for (auto& node : poset.nodes) {
      bool ok = is_closed(node, actors, side);
      lattice.ideals.push_back(OneSidedIdeal{std::move(node), side, ok});
    }
    return lattice;
  }

  ////////////////////////////////////////////////////////////////////////
  // Corners, products, identities
  ////////////////////////////////////////////////////////////////////////

  Element CornerRing::embed(Vec const& local) const {
    FiniteRing const& ambient = image.ring();
    Vec               v       = ambient.zero_vector();
    for (std::size_t u = 0; u < image.basis().size(); ++u) {
      zmod::add_multiple(v, image.basis()[u], local[u], ambient.modulus());
    }
    return ambient.element(std::move(v));
  }

  Subgroup CornerRing::embed(Subgroup const& local) const {
    check_same(ring, local.ring());
    std::vector<Vec> rows;
    for (auto const& row : local.basis()) {
      rows.push_back(embed(row).coords());
    }
    return Subgroup(image.ring(), std::move(rows));
  }

  Vec CornerRing::project(Element const& x) const {
    check_same(image.ring(), x.ring());
    auto c = image.coordinates(x.coords());
    if (!c) {
      throw Error(ErrorKind::ParameterOutOfRange,
                  "element " + format(x) + " does not lie in the subring");
    }
    for (auto& a : *c) {
      a = zmod::reduce(a, ring.modulus());
    }
    return *c;
  }

  CornerRing subring(Subgroup const& closed) {
    FiniteRing const&       ambient = closed.ring();
    std::vector<Vec> const& rows    = closed.basis();
    std::size_t const       r       = rows.size();
    Coord const             m       = ambient.modulus();
    if (r == 0) {
      RingSpec zero{m, 0, {}, {}};
      return CornerRing{make_ring_unchecked(std::move(zero)), closed};
    }
    Coord pivot = rows.front()[zmod::leading_index(rows.front())];
    for (auto const& row : rows) {
      if (row[zmod::leading_index(row)] != pivot) {
        throw Error(ErrorKind::MixedTorsion,
                    "subring is not free over a single Z/m'");
      }
    }
    Coord              local_m = m / pivot;
    std::vector<Coord> constants(r * r * r, 0);
    for (std::size_t s = 0; s < r; ++s) {
      for (std::size_t t = 0; t < r; ++t) {
        auto c = closed.coordinates(ambient.multiply(rows[s], rows[t]));
        if (!c) {
          throw Error(ErrorKind::InvariantViolation,
                      "subgroup is not closed under multiplication");
        }
        for (std::size_t u = 0; u < r; ++u) {
          constants[(s * r + t) * r + u] = zmod::reduce((*c)[u], local_m);
        }
      }
    }
    std::vector<std::string> labels;
    for (std::size_t s = 0; s < r; ++s) {
      labels.push_back("h" + std::to_string(s));
    }
    return CornerRing{
        make_ring(RingSpec{local_m, r, std::move(labels), std::move(constants)}),
        closed};
  }

  CornerRing corner_ring(FiniteRing const& ring, Element const& e) {
    check_same(ring, e.ring());
    if (!(e * e == e)) {
      throw Error(ErrorKind::NotIdempotent,
                  "e * e != e for e = " + format(e));
    }
    Subgroup span_e(ring, {e.coords()});
    Subgroup corner =
        subgroup_product(subgroup_product(span_e, whole_ring(ring)), span_e);
    return subring(corner);
  }

  FiniteRing direct_product(std::span<FiniteRing const> rings) {
    if (rings.empty()) {
      throw Error(ErrorKind::ShapeMismatch, "direct product of no rings");
    }
    Coord       m    = rings.front().modulus();
    std::size_t rank = 0;
    for (auto const& r : rings) {
      if (r.modulus() != m) {
        throw Error(ErrorKind::ModulusMismatch,
                    "moduli " + std::to_string(m) + " and "
                        + std::to_string(r.modulus()) + " differ");
      }
      rank += r.rank();
    }
    RingSpec spec{m, rank, {}, std::vector<Coord>(rank * rank * rank, 0)};
    std::size_t offset = 0;
    for (std::size_t t = 0; t < rings.size(); ++t) {
      auto const& r = rings[t];
      std::size_t n = r.rank();
      for (std::size_t i = 0; i < n; ++i) {
        spec.labels.push_back(rings.size() == 1
                                  ? r.labels()[i]
                                  : "R" + std::to_string(t) + "." + r.labels()[i]);
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            spec.constants[((offset + i) * rank + offset + j) * rank
                           + offset + k] = r.constant(i, j, k);
          }
        }
      }
      offset += n;
    }
    return make_ring(std::move(spec));
  }

  std::string direct_sum_defect(FiniteRing const&            ring,
                                std::vector<Subgroup> const& parts) {
    Subgroup      sum   = zero_subgroup(ring);
    std::uint64_t total = 1;
    bool          over  = false;
    for (auto const& p : parts) {
      sum = subgroup_sum(sum, p);
      if (!over && total > ring.order() / p.order()) {
        over = true;
      }
      total *= over ? 1 : p.order();
    }
    if (sum.order() != ring.order()) {
      return "the components span a subgroup of order "
           + std::to_string(sum.order()) + " < |S| = "
           + std::to_string(ring.order());
    }
    if (over || total != ring.order()) {
      return "the components overlap (orders do not multiply to |S| = "
           + std::to_string(ring.order()) + ")";
    }
    return {};
  }

  std::optional<Vec> find_identity_in(Subgroup const& closed) {
    FiniteRing const&       ring = closed.ring();
    std::vector<Vec> const& rows = closed.basis();
    if (rows.empty()) {
      return ring.zero_vector();
    }
    // u = sum_j x_j h_j with u h_i = h_i = h_i u for every basis row h_i.
    std::size_t const n = ring.rank();
    std::vector<Vec>  a;
    for (auto const& hj : rows) {
      Vec row;
      row.reserve(2 * rows.size() * n);
      for (auto const& hi : rows) {
        auto left  = ring.multiply(hj, hi);
        auto right = ring.multiply(hi, hj);
        row.insert(row.end(), left.begin(), left.end());
        row.insert(row.end(), right.begin(), right.end());
      }
      a.push_back(std::move(row));
    }
    Vec b;
    for (auto const& hi : rows) {
      b.insert(b.end(), hi.begin(), hi.end());
      b.insert(b.end(), hi.begin(), hi.end());
    }
    auto x = zmod::solve_left(a, b, ring.modulus());
    if (!x) {
      return std::nullopt;
    }
    Vec u = ring.zero_vector();
    for (std::size_t j = 0; j < rows.size(); ++j) {
      zmod::add_multiple(u, rows[j], (*x)[j], ring.modulus());
    }
    return u;
  }

  std::optional<Element> find_identity(FiniteRing const& ring) {
    auto u = find_identity_in(whole_ring(ring));
    if (!u) {
      return std::nullopt;
    }
    return ring.element(std::move(*u));
  }

  std::optional<Element> inverse_of(Element const& x) {
    FiniteRing const& ring = x.ring();
    auto              one  = find_identity(ring);
    if (!one) {
      return std::nullopt;
    }
    std::vector<Vec> a;
    for (std::size_t j = 0; j < ring.rank(); ++j) {
      a.push_back(ring.multiply(x.coords(), ring.basis_vector(j)));
    }
    auto y = zmod::solve_left(a, one->coords(), ring.modulus());
    if (!y) {
      return std::nullopt;
    }
    Element inv = ring.element(std::move(*y));
    if (!(inv * x == *one)) {
      return std::nullopt;
    }
    return inv;
  }

}  // namespace peirce
