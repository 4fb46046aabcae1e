#include "peirce/smallcat.hpp"

#include <algorithm>
#include <numeric>

#include "peirce/error.hpp"

namespace peirce {

  namespace {
    std::string idx(std::size_t i) {
      return std::to_string(i);
    }
  }  // namespace

  struct SmallCategory::Impl {
    CategorySpec                          spec;
    std::vector<std::vector<std::size_t>> hom;  // hom[a*p + b] = G(a, b)
  };

  SmallCategory::SmallCategory(std::shared_ptr<Impl const> impl)
      : _impl(std::move(impl)) {}

  std::size_t SmallCategory::object_count() const noexcept {
    return _impl->spec.objects;
  }
  std::size_t SmallCategory::morphism_count() const noexcept {
    return _impl->spec.dom.size();
  }
  std::size_t SmallCategory::dom(std::size_t g) const {
    return _impl->spec.dom.at(g);
  }
  std::size_t SmallCategory::cod(std::size_t g) const {
    return _impl->spec.cod.at(g);
  }
  std::size_t SmallCategory::identity(std::size_t a) const {
    return _impl->spec.identity.at(a);
  }
  bool SmallCategory::composable(std::size_t g, std::size_t h) const {
    return dom(g) == cod(h);
  }
  std::size_t SmallCategory::compose(std::size_t g, std::size_t h) const {
    return _impl->spec.compose.at(g * morphism_count() + h);
  }
  std::string const& SmallCategory::label(std::size_t g) const {
    return _impl->spec.labels.at(g);
  }
  CategorySpec const& SmallCategory::spec() const noexcept {
    return _impl->spec;
  }
  std::vector<std::size_t> const& SmallCategory::hom(std::size_t a,
                                                     std::size_t b) const {
    return _impl->hom.at(a * object_count() + b);
  }

  SmallCategory make_category(CategorySpec spec) {
    std::size_t const p = spec.objects;
    std::size_t const q = spec.dom.size();
    if (spec.cod.size() != q || spec.identity.size() != p
        || spec.compose.size() != q * q) {
      throw Error(ErrorKind::ShapeMismatch,
                  "expected " + idx(q) + " codomains, " + idx(p)
                      + " identities and " + idx(q * q) + " table entries");
    }
    if (!spec.labels.empty() && spec.labels.size() != q) {
      throw Error(ErrorKind::ShapeMismatch, "label count differs from morphism count");
    }
    for (std::size_t g = 0; g < q; ++g) {
      if (spec.dom[g] >= p || spec.cod[g] >= p) {
        throw Error(ErrorKind::ParameterOutOfRange,
                    "morphism " + idx(g) + " refers to a missing object");
      }
    }
    for (std::size_t a = 0; a < p; ++a) {
      if (spec.identity[a] >= q) {
        throw Error(ErrorKind::ParameterOutOfRange,
                    "identity of object " + idx(a) + " is not a morphism");
      }
    }
    for (std::size_t e : spec.compose) {
      if (e != kUndefined && e >= q) {
        throw Error(ErrorKind::ParameterOutOfRange,
                    "composition table entry " + idx(e) + " is not a morphism");
      }
    }
    if (spec.labels.empty()) {
      for (std::size_t g = 0; g < q; ++g) {
        spec.labels.push_back("g" + idx(g));
      }
    }
    auto const& c = spec.compose;
    for (std::size_t a = 0; a < p; ++a) {
      std::size_t i = spec.identity[a];
      if (spec.dom[i] != a || spec.cod[i] != a) {
        throw Error(ErrorKind::IdentityLawViolation,
                    "identity " + idx(i) + " of object " + idx(a)
                        + " is not an endomorphism of " + idx(a));
      }
    }
    for (std::size_t g = 0; g < q; ++g) {
      for (std::size_t h = 0; h < q; ++h) {
        if (c[g * q + h] != kUndefined && spec.dom[g] != spec.cod[h]) {
          throw Error(ErrorKind::CompositionDomainMismatch,
                      "(" + idx(g) + "," + idx(h) + ") is defined but dom("
                          + idx(g) + ") != cod(" + idx(h) + ")");
        }
      }
    }
    for (std::size_t g = 0; g < q; ++g) {
      for (std::size_t h = 0; h < q; ++h) {
        if (c[g * q + h] == kUndefined && spec.dom[g] == spec.cod[h]) {
          throw Error(ErrorKind::CompositionMissing,
                      "(" + idx(g) + "," + idx(h) + ") is composable but undefined");
        }
      }
    }
    for (std::size_t g = 0; g < q; ++g) {
      for (std::size_t h = 0; h < q; ++h) {
        std::size_t gh = c[g * q + h];
        if (gh != kUndefined && (spec.dom[gh] != spec.dom[h] || spec.cod[gh] != spec.cod[g])) {
          throw Error(ErrorKind::CompositionDomainMismatch,
                      "composite of (" + idx(g) + "," + idx(h)
                          + ") has the wrong domain or codomain");
        }
      }
    }
    for (std::size_t h = 0; h < q; ++h) {
      std::size_t left  = spec.identity[spec.cod[h]];
      std::size_t right = spec.identity[spec.dom[h]];
      if (c[left * q + h] != h || c[h * q + right] != h) {
        throw Error(ErrorKind::IdentityLawViolation,
                    "identity law fails for morphism " + idx(h));
      }
    }
    for (std::size_t f = 0; f < q; ++f) {
      for (std::size_t g = 0; g < q; ++g) {
        std::size_t fg = c[f * q + g];
        if (fg == kUndefined) {
          continue;
        }
        for (std::size_t h = 0; h < q; ++h) {
          std::size_t gh = c[g * q + h];
          if (gh == kUndefined) {
            continue;
          }
          if (c[fg * q + h] != c[f * q + gh]) {
            throw Error(ErrorKind::NotAssociative,
                        "(" + idx(f) + "," + idx(g) + "," + idx(h) + ")");
          }
        }
      }
    }
    auto impl = std::make_shared<SmallCategory::Impl>();
    impl->hom.resize(p * p);
    for (std::size_t g = 0; g < q; ++g) {
      impl->hom[spec.cod[g] * p + spec.dom[g]].push_back(g);
    }
    impl->spec = std::move(spec);
    return SmallCategory(std::move(impl));
  }

  std::vector<std::size_t> hom_set(SmallCategory const& cat,
                                   std::size_t          a,
                                   std::size_t          b) {
    if (a >= cat.object_count() || b >= cat.object_count()) {
      throw Error(ErrorKind::ParameterOutOfRange, "object index out of range");
    }
    return cat.hom(a, b);
  }

  GroupoidCheck is_groupoid(SmallCategory const& cat) {
    std::size_t const q = cat.morphism_count();
    GroupoidCheck     r;
    r.inverse.assign(q, kUndefined);
    for (std::size_t g = 0; g < q; ++g) {
      for (std::size_t h : cat.hom(cat.dom(g), cat.cod(g))) {
        if (cat.compose(g, h) == cat.identity(cat.cod(g))
            && cat.compose(h, g) == cat.identity(cat.dom(g))) {
          r.inverse[g] = h;
          break;
        }
      }
      if (r.inverse[g] == kUndefined) {
        r.witness = g;
        r.inverse.clear();
        return r;
      }
    }
    r.groupoid = true;
    return r;
  }

  namespace {

    struct HomBlocks {
      SmallCategory const& cat;

      std::size_t size() const {
        return cat.object_count();
      }
      bool nonzero(std::size_t a, std::size_t b) const {
        return !cat.hom(a, b).empty();
      }
      // G(a, b) G(b, c) as a sorted set of composites
      std::vector<std::size_t> product(std::size_t a, std::size_t b, std::size_t c) const {
        std::vector<std::size_t> out;
        for (std::size_t g : cat.hom(a, b)) {
          for (std::size_t h : cat.hom(b, c)) {
            out.push_back(cat.compose(g, h));
          }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
      }
      bool equals(std::vector<std::size_t> const& p, std::size_t a, std::size_t c) const {
        return p == cat.hom(a, c);
      }
      bool has_unit(std::vector<std::size_t> const& p, std::size_t x) const {
        return std::binary_search(p.begin(), p.end(), cat.identity(x));
      }
      std::vector<Vec> describe(std::vector<std::size_t> const& p) const {
        return {Vec(p.begin(), p.end())};
      }
      std::string name(std::size_t a, std::size_t b) const {
        return "G(" + idx(a) + "," + idx(b) + ")";
      }
    };

  }  // namespace

  HomSetStrongReport homset_strong_report(SmallCategory const& cat) {
    return detail::evaluate_strong(HomBlocks{cat});
  }

  bool is_homset_strong(SmallCategory const& cat) {
    return detail::condition_three(HomBlocks{cat}).holds;
  }

  ////////////////////////////////////////////////////////////////////////
  // Monoids
  ////////////////////////////////////////////////////////////////////////

  void validate_monoid(Monoid const& m) {
    std::size_t const k = m.size;
    if (k == 0 || m.table.size() != k * k) {
      throw Error(ErrorKind::ShapeMismatch,
                  "Cayley table must have size^2 = " + idx(k * k) + " entries");
    }
    if (m.identity >= k
        || std::any_of(m.table.begin(), m.table.end(), [&](auto v) { return v >= k; })) {
      throw Error(ErrorKind::ParameterOutOfRange, "Cayley table entry out of range");
    }
    auto mul = [&](std::size_t x, std::size_t y) { return m.table[x * k + y]; };
    for (std::size_t x = 0; x < k; ++x) {
      if (mul(m.identity, x) != x || mul(x, m.identity) != x) {
        throw Error(ErrorKind::NotAMonoid,
                    "identity " + idx(m.identity) + " fails at " + idx(x));
      }
    }
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        for (std::size_t z = 0; z < k; ++z) {
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
            throw Error(ErrorKind::NotAMonoid,
                        "(" + idx(x) + " " + idx(y) + ") " + idx(z) + " != " + idx(x)
                            + " (" + idx(y) + " " + idx(z) + ")");
          }
        }
      }
    }
  }

  bool is_group(Monoid const& m) {
    for (std::size_t x = 0; x < m.size; ++x) {
      bool found = false;
      for (std::size_t y = 0; y < m.size && !found; ++y) {
        found = m.table[x * m.size + y] == m.identity
             && m.table[y * m.size + x] == m.identity;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  namespace {

    template <class F>
    Monoid tabulate(std::string name, std::size_t k, std::size_t identity, F f) {
      Monoid m{std::move(name), k, identity, std::vector<std::size_t>(k * k)};
      for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t y = 0; y < k; ++y) {
          m.table[x * k + y] = f(x, y);
        }
      }
      return m;
    }

    Monoid cyclic(std::size_t n) {
      return tabulate("C" + idx(n), n, 0, [n](auto x, auto y) { return (x + y) % n; });
    }

    // maps {0..n-1} -> {0..n-1} encoded in base n, value at 0 most significant
    std::vector<std::size_t> decode_map(std::size_t code, std::size_t n) {
      std::vector<std::size_t> f(n);
      for (std::size_t i = n; i-- > 0;) {
        f[i] = code % n;
        code /= n;
      }
      return f;
    }

  }  // namespace

  Monoid named_monoid(std::string_view name) {
    if (name == "C1") return cyclic(1);
    if (name == "C2") return cyclic(2);
    if (name == "C3") return cyclic(3);
    if (name == "C4") return cyclic(4);
    if (name == "V4") {
      return tabulate("V4", 4, 0, [](auto x, auto y) { return x ^ y; });
    }
    if (name == "S3") {
      std::vector<std::vector<std::size_t>> perms;
      std::vector<std::size_t>              p{0, 1, 2};
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      return tabulate("S3", 6, 0, [&](auto x, auto y) {
        std::vector<std::size_t> r(3);
        for (std::size_t i = 0; i < 3; ++i) {
          r[i] = perms[x][perms[y][i]];
        }
        return static_cast<std::size_t>(
            std::find(perms.begin(), perms.end(), r) - perms.begin());
      });
    }
    if (name == "Z01") {
      // element 0 is 1, element 1 is 0
      return tabulate("Z01", 2, 0, [](auto x, auto y) { return x | y; });
    }
    if (name == "T2") {
      return tabulate("T2", 4, 1, [](auto x, auto y) {
        auto f = decode_map(x, 2), g = decode_map(y, 2);
        return f[g[0]] * 2 + f[g[1]];
      });
    }
    if (name == "N3") {
      // 0 = 1, 1 = a, 2 = zero, a a = zero
      return tabulate("N3", 3, 0, [](auto x, auto y) -> std::size_t {
        if (x == 0) return y;
        if (y == 0) return x;
        return 2;
      });
    }
    throw Error(ErrorKind::ParameterOutOfRange, "unknown monoid " + std::string(name));
  }

  std::vector<std::string> monoid_names() {
    return {"C1", "C2", "C3", "C4", "V4", "S3", "Z01", "T2", "N3"};
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  SmallCategory build_MX(Monoid const& monoid, std::size_t s) {
    validate_monoid(monoid);
    if (s == 0) {
      throw Error(ErrorKind::ParameterOutOfRange, "MX needs a nonempty set X");
    }
    std::size_t const k = monoid.size;
    std::size_t const q = k * s * s;
    CategorySpec      spec;
    spec.objects = s;
    spec.dom.resize(q);
    spec.cod.resize(q);
    spec.labels.resize(q);
    spec.compose.assign(q * q, kUndefined);
    auto index = [&](std::size_t m, std::size_t x, std::size_t y) {
      return m * s * s + x * s + y;
    };
    for (std::size_t m = 0; m < k; ++m) {
      for (std::size_t x = 0; x < s; ++x) {
        for (std::size_t y = 0; y < s; ++y) {
          std::size_t g = index(m, x, y);
          spec.dom[g]    = y;
          spec.cod[g]    = x;
          spec.labels[g] = "(" + idx(m) + "," + idx(x) + "," + idx(y) + ")";
        }
      }
    }
    for (std::size_t x = 0; x < s; ++x) {
      spec.identity.push_back(index(monoid.identity, x, x));
    }
    for (std::size_t m = 0; m < k; ++m) {
      for (std::size_t n = 0; n < k; ++n) {
        std::size_t mn = monoid.table[m * k + n];
        for (std::size_t x = 0; x < s; ++x) {
          for (std::size_t y = 0; y < s; ++y) {
            for (std::size_t z = 0; z < s; ++z) {
              spec.compose[index(m, x, y) * q + index(n, y, z)] = index(mn, x, z);
            }
          }
        }
      }
    }
    return make_category(std::move(spec));
  }

  SmallCategory trivial_category() {
    return make_category(CategorySpec{1, {0}, {0}, {0}, {0}, {"id"}});
  }

  SmallCategory arrow_category() {
    std::size_t const U = kUndefined;
    // 0 = id_A, 1 = id_B, 2 = f : A -> B
    return make_category(CategorySpec{2,
                                      {0, 1, 0},
                                      {0, 1, 1},
                                      {0, 1},
                                      {0, U, U,  //
                                       U, 1, 2,  //
                                       2, U, U},
                                      {"A", "B", "f"}});
  }

  SmallCategory pair_groupoid(std::size_t objects) {
    return build_MX(named_monoid("C1"), objects);
  }

  SmallCategory disjoint_union(std::vector<SmallCategory> const& parts) {
    CategorySpec spec;
    std::size_t  q = 0;
    for (auto const& c : parts) {
      q += c.morphism_count();
    }
    spec.compose.assign(q * q, kUndefined);
    std::size_t obj = 0, mor = 0;
    for (auto const& c : parts) {
      std::size_t const cq = c.morphism_count();
      for (std::size_t g = 0; g < cq; ++g) {
        spec.dom.push_back(obj + c.dom(g));
        spec.cod.push_back(obj + c.cod(g));
        spec.labels.push_back(c.label(g));
        for (std::size_t h = 0; h < cq; ++h) {
          std::size_t gh = c.compose(g, h);
          if (gh != kUndefined) {
            spec.compose[(mor + g) * q + mor + h] = mor + gh;
          }
        }
      }
      for (std::size_t a = 0; a < c.object_count(); ++a) {
        spec.identity.push_back(mor + c.identity(a));
      }
      obj += c.object_count();
      mor += cq;
    }
    spec.objects = obj;
    return make_category(std::move(spec));
  }

  SmallCategory opposite(SmallCategory const& cat) {
    CategorySpec      spec = cat.spec();
    std::size_t const q    = cat.morphism_count();
    std::swap(spec.dom, spec.cod);
    for (std::size_t g = 0; g < q; ++g) {
      for (std::size_t h = 0; h < q; ++h) {
        spec.compose[g * q + h] = cat.compose(h, g);
      }
    }
    return make_category(std::move(spec));
  }

  Monoid endomorphism_monoid(SmallCategory const& cat, std::size_t a) {
    auto const& elems = cat.hom(a, a);
    std::size_t k     = elems.size();
    auto        local = [&](std::size_t g) {
      return static_cast<std::size_t>(
          std::lower_bound(elems.begin(), elems.end(), g) - elems.begin());
    };
    return tabulate("G(" + idx(a) + ")", k, local(cat.identity(a)),
                    [&](auto x, auto y) { return local(cat.compose(elems[x], elems[y])); });
  }

  FinitenessReport finiteness_report(SmallCategory const& cat) {
    FinitenessReport  r;
    std::size_t const p = cat.object_count();
    r.objects           = p;
    r.morphisms         = cat.morphism_count();
    std::size_t largest = 0;
    for (std::size_t a = 0; a < p; ++a) {
      r.endomorphisms.push_back(cat.hom(a, a).size());
      largest = std::max(largest, cat.hom(a, a).size());
    }
    r.homset_strong = is_homset_strong(cat);
    if (!r.homset_strong) {
      return r;
    }
    for (std::size_t c = 0; c < p; ++c) {
      for (std::size_t d = 0; d < p; ++d) {
        auto const& cd = cat.hom(c, d);
        if (c == d || cd.empty()) {
          continue;
        }
        // v : c -> d and u : d -> c with v u = d, from condition (3) at (d, c)
        std::size_t u = kUndefined, v = kUndefined;
        for (std::size_t vv : cat.hom(d, c)) {
          for (std::size_t uu : cd) {
            if (u == kUndefined && cat.compose(vv, uu) == cat.identity(d)) {
              v = vv;
              u = uu;
            }
          }
        }
        bool ok = u != kUndefined;
        std::vector<std::size_t> images;
        for (std::size_t g = 0; ok && g < cd.size(); ++g) {
          std::size_t a = cat.compose(cd[g], v);
          ok            = cat.compose(a, u) == cd[g];
          images.push_back(a);
        }
        std::sort(images.begin(), images.end());
        ok = ok && std::adjacent_find(images.begin(), images.end()) == images.end();
        if (!ok && r.injections) {
          r.injections = false;
          r.witness    = {c, d};
        }
        if (cd.size() > cat.hom(c, c).size() && r.hom_bound) {
          r.hom_bound = false;
          if (r.witness.empty()) {
            r.witness = {c, d};
          }
        }
      }
    }
    r.global_bound = r.morphisms <= p * p * largest;
    return r;
  }

  GroupPredicates group_predicates(SmallCategory const& cat, std::size_t a) {
    if (a >= cat.object_count()) {
      throw Error(ErrorKind::ParameterOutOfRange, "object index out of range");
    }
    auto m = endomorphism_monoid(cat, a);
    if (!is_group(m)) {
      throw Error(ErrorKind::NotAGroup, "G(" + idx(a) + ") is not a group");
    }
    // A finite group is torsion-free iff it is trivial; the series 1 < G
    // has a finite factor, so it is always polycyclic-by-finite.
    return {true, m.size == 1, true};
  }

}  // namespace peirce
