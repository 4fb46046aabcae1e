#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "peirce/error.hpp"
#include "peirce/finring.hpp"

using namespace peirce;

namespace {

  FiniteRing m2f2() {
    return make_ring(oracle::matrix_units(2, 2));
  }

  ErrorKind kind_of(auto&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::InvariantViolation;
  }

  Element e(FiniteRing const& r, std::size_t a, std::size_t b) {
    return r.basis(a * 2 + b);
  }

  std::vector<Vec> set_members(oracle::Tables const& t, oracle::Set const& s) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < t.size; ++i) {
      if (s[i]) {
        out.push_back(t.ring.decode(i));
      }
    }
    return out;
  }

  // Same ring with its basis permuted: b'_i = b_{perm[i]}.
  RingSpec relabel(RingSpec const& spec, std::vector<std::size_t> const& perm) {
    std::size_t n = spec.rank;
    RingSpec    out{spec.modulus, n, {}, std::vector<Coord>(n * n * n)};
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) {
      inv[perm[i]] = i;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          out.constants[(i * n + j) * n + inv[k]] =
              spec.constants[(perm[i] * n + perm[j]) * n + k];
        }
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("make_ring accepts valid structure constants") {
  auto f2 = make_ring(2, 1, {1});
  CHECK(f2.order() == 2);
  auto m2 = m2f2();
  CHECK(m2.order() == 16);
  CHECK(m2.rank() == 4);
  CHECK(m2.labels().front() == "b0");
}

TEST_CASE("make_ring rejects a perturbed matrix ring") {
  auto spec = oracle::matrix_units(2, 2);
  // E11 * E11 := E11 + E12
  spec.constants[(0 * 4 + 0) * 4 + 1] = 1;
  REQUIRE_FALSE(oracle::associative(spec));
  CHECK(kind_of([&] { make_ring(spec); }) == ErrorKind::NotAssociative);
}

TEST_CASE("make_ring shape and range errors") {
  CHECK(kind_of([] { make_ring(1, 1, {0}); }) == ErrorKind::ModulusTooSmall);
  CHECK(kind_of([] { make_ring(2, 2, {0, 0, 0}); }) == ErrorKind::ShapeMismatch);
  CHECK(kind_of([] { make_ring(2, 1, {0}, {"a", "b"}); })
        == ErrorKind::ShapeMismatch);
  CHECK(kind_of([] { make_ring(2, 1, {2}); }) == ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([] { make_ring(2, 0, {}); }) == ErrorKind::ShapeMismatch);
}

TEST_CASE("evaluate") {
  auto m2 = m2f2();
  CHECK(evaluate(m2, Expr::product({Expr::leaf(e(m2, 0, 0)),
                                    Expr::leaf(e(m2, 0, 1))}))
        == e(m2, 0, 1));
  auto x = m2.element({1, 1, 0, 1});
  CHECK(evaluate(m2, Expr::sum({Expr::leaf(x), Expr::negate(Expr::leaf(x))}))
            .is_zero());
  auto one = Expr::sum({Expr::leaf(e(m2, 0, 0)), Expr::leaf(e(m2, 1, 1))});
  for (std::size_t idx = 0; idx < 16; ++idx) {
    Vec v{Coord(idx >> 3 & 1), Coord(idx >> 2 & 1), Coord(idx >> 1 & 1),
          Coord(idx & 1)};
    auto y = m2.element(v);
    CHECK(evaluate(m2, Expr::product({one, Expr::leaf(y)})) == y);
  }
  auto other = m2f2();
  CHECK(kind_of([&] { evaluate(other, Expr::leaf(x)); })
        == ErrorKind::RingMismatch);
  CHECK(kind_of([&] { (void) (x + other.zero()); }) == ErrorKind::RingMismatch);
}

TEST_CASE("ring axioms hold exhaustively on small fixtures") {
  for (auto const& spec : {oracle::matrix_units(2, 2),
                           oracle::upper_triangular(3),
                           oracle::matrix_units(3, 1)}) {
    auto           ring = make_ring(spec);
    oracle::Tables t(spec);
    for (std::size_t a = 0; a < t.size; ++a) {
      for (std::size_t b = 0; b < t.size; ++b) {
        Vec ab = ring.multiply(t.ring.decode(a), t.ring.decode(b));
        CHECK(t.ring.encode(ab) == t.mul[a][b]);
        for (std::size_t c = 0; c < t.size; c += 3) {
          CHECK(t.mul[t.mul[a][b]][c] == t.mul[a][t.mul[b][c]]);
          CHECK(t.mul[a][t.add[b][c]] == t.add[t.mul[a][b]][t.mul[a][c]]);
          CHECK(t.mul[t.add[a][b]][c] == t.add[t.mul[a][c]][t.mul[b][c]]);
        }
      }
    }
  }
}

TEST_CASE("span_subgroup") {
  auto m2 = m2f2();
  CHECK(span_subgroup(m2, {}).order() == 1);
  std::vector<Element> gens{e(m2, 0, 0), e(m2, 0, 1)};
  oracle::Tables       t(m2.spec());
  CHECK(oracle::count(oracle::additive_closure(
            t, {gens[0].coords(), gens[1].coords()}))
        == 4);
  CHECK(span_subgroup(m2, gens).order() == 4);
  CHECK(whole_ring(m2).order() == 16);
  // span(span(X)) = span(X)
  auto s = span_subgroup(m2, gens);
  CHECK(Subgroup(m2, s.basis()) == s);
  CHECK(Subgroup(m2, s.elements()) == s);
}

TEST_CASE("one_sided_ideal_closure") {
  auto m2    = m2f2();
  auto left  = one_sided_ideal_closure(m2, std::vector{e(m2, 0, 0)}, Side::left);
  CHECK(left.closure_witnessed);
  CHECK(left.subgroup.order() == 4);
  for (auto const& x : {m2.zero(), e(m2, 0, 0), e(m2, 1, 0),
                        e(m2, 0, 0) + e(m2, 1, 0)}) {
    CHECK(left.subgroup.contains(x));
  }
  CHECK(one_sided_ideal_closure(m2, std::vector{m2.zero()}, Side::left)
            .subgroup.is_zero());
  auto one = *find_identity(m2);
  CHECK(one_sided_ideal_closure(m2, std::vector{one}, Side::right).subgroup
        == whole_ring(m2));
  // Z x is included even without a unit: zero multiplication ring mod 4
  auto zero_ring = make_ring(4, 1, {0});
  auto ideal = one_sided_ideal_closure(zero_ring, std::vector{zero_ring.basis(0)},
                                       Side::left);
  CHECK(ideal.subgroup.order() == 4);
}

TEST_CASE("ideal lattices agree with the brute force oracle") {
  struct Case {
    RingSpec    spec;
    std::size_t left_size, left_height;
  };
  // Frozen values below were produced by oracle::one_sided_ideals.
  std::vector<Case> cases{
      {oracle::matrix_units(2, 2), 5, 2},
      {RingSpec{2, 1, {}, {1}}, 2, 1},
      {RingSpec{2, 1, {}, {0}}, 2, 1},
      {oracle::upper_triangular(2), 7, 3},
      {RingSpec{2, 2, {}, {1, 0, 0, 1, 0, 1, 1, 0}}, 3, 2},  // (Z/2)[C_2]
  };
  for (auto const& c : cases) {
    oracle::Tables t(c.spec);
    auto           ring = make_ring(c.spec);
    for (Side side : {Side::left, Side::right}) {
      auto expected = oracle::one_sided_ideals(t, side);
      auto lattice  = enumerate_one_sided_ideals(ring, side);
      CHECK(lattice.size() == expected.size());
      CHECK(lattice.height == oracle::height(expected));
      for (auto const& set : expected) {
        auto sub = Subgroup(ring, set_members(t, set));
        CHECK(sub.order() == oracle::count(set));
        bool listed = false;
        for (auto const& ideal : lattice.ideals) {
          listed = listed || ideal.subgroup == sub;
        }
        CHECK(listed);
      }
    }
    auto left = enumerate_one_sided_ideals(ring, Side::left);
    CHECK(left.size() == c.left_size);
    CHECK(left.height == c.left_height);
  }
}

TEST_CASE("direct products") {
  auto f2 = make_ring(2, 1, {1});
  auto pp = direct_product(std::vector{f2, f2});
  CHECK(pp.rank() == 2);
  CHECK(pp.multiply({1, 1}, {0, 1}) == Vec{0, 1});
  auto m2 = m2f2();
  CHECK(direct_product(std::vector{m2}).spec().constants == m2.spec().constants);
  auto prod = direct_product(std::vector{m2, f2});
  CHECK(prod.rank() == 5);
  // frozen from oracle::one_sided_ideals on the rank 5 product: 10
  oracle::Tables t(prod.spec());
  CHECK(oracle::one_sided_ideals(t, Side::left).size() == 10);
  CHECK(enumerate_one_sided_ideals(prod, Side::left).size() == 10);
  auto f3 = make_ring(3, 1, {1});
  CHECK(kind_of([&] { direct_product(std::vector{f2, f3}); })
        == ErrorKind::ModulusMismatch);
}

TEST_CASE("lattice is join and meet closed and left ideals absorb") {
  for (auto const& spec : {oracle::matrix_units(2, 2), oracle::upper_triangular(2),
                           oracle::matrix_units(3, 1)}) {
    auto ring    = make_ring(spec);
    auto lattice = enumerate_one_sided_ideals(ring, Side::left);
    auto listed  = [&](Subgroup const& s) {
      for (auto const& i : lattice.ideals) {
        if (i.subgroup == s) {
          return true;
        }
      }
      return false;
    };
    for (auto const& a : lattice.ideals) {
      CHECK(a.closure_witnessed);
      for (auto const& b : lattice.ideals) {
        CHECK(listed(subgroup_sum(a.subgroup, b.subgroup)));
        CHECK(listed(intersect(a.subgroup, b.subgroup)));
      }
      for (auto const& s : whole_ring(ring).elements()) {
        for (auto const& x : a.subgroup.elements()) {
          CHECK(a.subgroup.contains(ring.multiply(s, x)));
        }
      }
    }
    CHECK(lattice.ideals.front().subgroup.is_zero());
    CHECK(lattice.ideals.back().subgroup == whole_ring(ring));
  }
}

TEST_CASE("lattice statistics are invariant under relabelling the basis") {
  std::mt19937_64 rng(17);
  for (auto const& spec : {oracle::matrix_units(2, 2), oracle::upper_triangular(2),
                           oracle::upper_triangular(3)}) {
    auto base = make_ring(spec);
    auto ref  = enumerate_one_sided_ideals(base, Side::left);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<std::size_t> perm(spec.rank);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      auto copy = make_ring(relabel(spec, perm));
      auto lat  = enumerate_one_sided_ideals(copy, Side::left);
      CHECK(lat.height == ref.height);
      CHECK(lat.size() == ref.size());
    }
  }
}

TEST_CASE("enumeration cap") {
  auto m2 = m2f2();
  CHECK(kind_of([&] { enumerate_one_sided_ideals(m2, Side::left, 3); })
        == ErrorKind::LatticeTooLarge);
  CHECK(kind_of([&] { enumerate_one_sided_ideals(m2, Side::left, 10); })
        == ErrorKind::LatticeTooLarge);
}

TEST_CASE("corner rings") {
  auto m2     = m2f2();
  auto corner = corner_ring(m2, e(m2, 0, 0));
  CHECK(corner.ring.order() == 2);
  CHECK(corner.image.order() == 2);
  auto one = find_identity(corner.ring);
  REQUIRE(one);
  CHECK(corner.embed(one->coords()) == e(m2, 0, 0));
  CHECK(corner.project(e(m2, 0, 0)) == one->coords());
  // E11 S E11 computed by brute force is {0, E11}
  std::size_t members = 0;
  for (auto const& s : whole_ring(m2).elements()) {
    Vec v = m2.multiply(m2.multiply(e(m2, 0, 0).coords(), s), e(m2, 0, 0).coords());
    members += corner.image.contains(v);
  }
  CHECK(members == 16);

  auto full = corner_ring(m2, *find_identity(m2));
  CHECK(full.ring.order() == 16);
  CHECK(enumerate_one_sided_ideals(full.ring, Side::left).size() == 5);

  auto zero = corner_ring(m2, m2.zero());
  CHECK(zero.ring.order() == 1);
  CHECK(zero.ring.rank() == 0);

  CHECK(kind_of([&] { corner_ring(m2, e(m2, 0, 1)); }) == ErrorKind::NotIdempotent);

  // Z/6 with e = 3: the corner {0, 3} is Z/2
  auto z6 = make_ring(6, 1, {1});
  auto c3 = corner_ring(z6, z6.element({3}));
  CHECK(c3.ring.modulus() == 2);
  CHECK(c3.ring.order() == 2);
}

TEST_CASE("find_identity") {
  auto m2 = m2f2();
  CHECK(*find_identity(m2) == e(m2, 0, 0) + e(m2, 1, 1));
  CHECK_FALSE(find_identity(make_ring(2, 2, std::vector<Coord>(8, 0))));
  CHECK_FALSE(find_identity(make_ring(3, 1, {0})));
  auto z6 = make_ring(6, 1, {1});
  CHECK(*find_identity(z6) == z6.basis(0));
  auto t2 = make_ring(oracle::upper_triangular(2));
  CHECK(*find_identity(t2) == t2.element({1, 0, 1}));
  // left identity only: the ring with b0 b_j = b_j, b1 b_j = 0 (not unital)
  RingSpec left_only{2, 2, {}, {1, 0, 0, 1, 0, 0, 0, 0}};
  REQUIRE(oracle::associative(left_only));
  CHECK_FALSE(find_identity(make_ring(left_only)));
}

TEST_CASE("inverse_of") {
  auto m2 = m2f2();
  auto x  = m2.element({1, 1, 0, 1});
  auto y  = inverse_of(x);
  REQUIRE(y);
  CHECK(x * *y == *find_identity(m2));
  CHECK_FALSE(inverse_of(e(m2, 0, 0)));
}
