#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "peirce/error.hpp"
#include "peirce/skewalg.hpp"

using namespace peirce;

namespace {

  ErrorKind kind_of(auto&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::InvariantViolation;
  }

  FiniteRing diagonal(Coord m, std::size_t k) {
    std::vector<Coord> c(k * k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      c[(i * k + i) * k + i] = 1;
    }
    return make_ring(m, k, c);
  }

  RingMap permutation(std::vector<std::size_t> const& image) {
    std::size_t k = image.size();
    RingMap     a(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      a[i * k + image[i]] = 1;
    }
    return a;
  }

  // C_2 acting on a diagonal ring through a basis permutation of order <= 2.
  SkewCategorySystem c2_system(FiniteRing const& ring, std::vector<std::size_t> const& swap) {
    return validate_system(build_MX(named_monoid("C2"), 1), {ring},
                           {identity_map(ring.rank()), permutation(swap)});
  }

  // (sum r_g g)(sum r'_h h) from the definition, elements as per-morphism
  // coordinate blocks.
  Vec skew_product(SkewCategorySystem const& sys, Vec const& x, Vec const& y) {
    auto const&              cat = sys.category;
    std::size_t              q   = cat.morphism_count();
    std::vector<std::size_t> off{0};
    for (std::size_t g = 0; g < q; ++g) {
      off.push_back(off.back() + sys.ring_at(cat.cod(g)).rank());
    }
    Vec out(off.back(), 0);
    for (std::size_t g = 0; g < q; ++g) {
      oracle::Ring rg(sys.ring_at(cat.cod(g)).spec());
      Vec          r(x.begin() + off[g], x.begin() + off[g + 1]);
      for (std::size_t h = 0; h < q; ++h) {
        if (!cat.composable(g, h)) {
          continue;
        }
        Vec          s(y.begin() + off[h], y.begin() + off[h + 1]);
        std::size_t  dn = s.size(), cn = rg.n;
        Vec          moved(cn, 0);
        for (std::size_t i = 0; i < dn; ++i) {
          for (std::size_t k = 0; k < cn; ++k) {
            moved[k] = (moved[k] + s[i] * sys.maps[g][i * cn + k]) % rg.m;
          }
        }
        Vec         prod = rg.mul(r, moved);
        std::size_t gh   = cat.compose(g, h);
        for (std::size_t k = 0; k < cn; ++k) {
          out[off[gh] + k] = (out[off[gh] + k] + prod[k]) % rg.m;
        }
      }
    }
    return out;
  }

  std::vector<SkewCategorySystem> assorted_systems() {
    std::vector<SkewCategorySystem> out;
    std::vector<SmallCategory>      cats{trivial_category(), arrow_category(), pair_groupoid(2),
                                         build_MX(named_monoid("Z01"), 2),
                                         build_MX(named_monoid("C2"), 2),
                                         disjoint_union({arrow_category(), trivial_category()})};
    for (auto const& c : cats) {
      out.push_back(constant_system(make_ring(2, 1, {1}), c));
      out.push_back(constant_system(make_ring(3, 1, {1}), c));
    }
    out.push_back(c2_system(diagonal(3, 2), {1, 0}));
    out.push_back(c2_system(diagonal(2, 3), {1, 0, 2}));
    out.push_back(constant_system(diagonal(2, 2), arrow_category()));
    return out;
  }

}  // namespace

TEST_CASE("validate_system rejections") {
  auto c2 = build_MX(named_monoid("C2"), 1);
  auto d  = diagonal(3, 2);
  CHECK_NOTHROW(c2_system(d, {1, 0}));
  CHECK(kind_of([&] { validate_system(c2, {d}, {identity_map(2)}); }) == ErrorKind::ShapeMismatch);
  CHECK(kind_of([&] { validate_system(c2, {d}, {identity_map(2), {1, 0, 0}}); })
        == ErrorKind::ShapeMismatch);
  CHECK(kind_of([&] {
          validate_system(pair_groupoid(2), {make_ring(2, 1, {1}), make_ring(3, 1, {1})},
                          {{1}, {1}, {1}, {1}});
        })
        == ErrorKind::ModulusMismatch);
  CHECK(kind_of([&] { constant_system(make_ring(2, 1, {0}), c2); }) == ErrorKind::NotUnital);
  // b0 -> b0 + b1, b1 -> b1 sends b0 b1 = 0 to b1
  CHECK(kind_of([&] { validate_system(c2, {d}, {identity_map(2), {1, 1, 0, 1}}); })
        == ErrorKind::NotRingIso);
  CHECK(kind_of([&] { validate_system(c2, {d}, {identity_map(2), {0, 0, 0, 1}}); })
        == ErrorKind::NotRingIso);
  CHECK(kind_of([&] { validate_system(c2, {d}, {permutation({1, 0}), permutation({1, 0})}); })
        == ErrorKind::IdentityNotIdentity);
  // a 3-cycle has order 3 but g g = e in C_2
  auto d3 = diagonal(3, 3);
  CHECK(kind_of([&] { validate_system(c2, {d3}, {identity_map(3), permutation({1, 2, 0})}); })
        == ErrorKind::NotFunctorial);
  CHECK_NOTHROW(validate_system(c2, {d3}, {identity_map(3), permutation({1, 0, 2})}));
}

TEST_CASE("category algebra of the pair groupoid is M_2(T)") {
  for (Coord m : {2, 3}) {
    auto alg = build_category_algebra(make_ring(m, 1, {1}), pair_groupoid(2));
    // 1 (a, b) at index a*2 + b, which is where E_ab sits
    CHECK(alg.ring.spec().constants == oracle::matrix_units(m, 2).constants);
    CHECK(alg.strongly_graded);
    CHECK(alg.object_unital);
  }
}

TEST_CASE("category algebra of the arrow category is T_2") {
  for (Coord m : {2, 3}) {
    auto                     alg = build_category_algebra(make_ring(m, 1, {1}), arrow_category());
    auto                     t2  = oracle::upper_triangular(m);
    std::vector<std::size_t> to{2, 0, 1};  // id_A -> E22, id_B -> E11, f -> E12
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t k = 0; k < 3; ++k) {
          CHECK(alg.ring.constant(i, j, k) == t2.constants[(to[i] * 3 + to[j]) * 3 + to[k]]);
        }
      }
    }
    auto eq = strong_idempotent_equivalence_check(alg);
    CHECK_FALSE(eq.idempotents_strong);
    CHECK_FALSE(eq.category_homset_strong);
    CHECK(eq.holds());
  }
}

TEST_CASE("group algebra (Z/2)[C_2]") {
  auto alg = build_category_algebra(make_ring(2, 1, {1}), build_MX(named_monoid("C2"), 1));
  oracle::Tables t(alg.ring.spec());
  auto           left = oracle::one_sided_ideals(t, Side::left);
  CHECK(left.size() == 3);
  CHECK(lattice_stats(alg.ring).left_size == left.size());
}

TEST_CASE("MX(Z01, 2) algebra is strong without being a groupoid") {
  auto cat = build_MX(named_monoid("Z01"), 2);
  REQUIRE_FALSE(is_groupoid(cat).groupoid);
  auto alg = build_category_algebra(make_ring(2, 1, {1}), cat);
  auto eq  = strong_idempotent_equivalence_check(alg);
  CHECK(eq.idempotents_strong);
  CHECK(eq.category_homset_strong);
  REQUIRE(eq.graded);
  CHECK(eq.graded->conditions.condition3.holds);
  CHECK(eq.holds());
}

TEST_CASE("skew products match the definition") {
  std::mt19937_64 rng(20261017);
  for (auto const& sys : assorted_systems()) {
    auto alg = build_skew_algebra(sys);
    CHECK(oracle::associative(alg.ring.spec()));
    Coord m = alg.ring.modulus();
    std::uniform_int_distribution<Coord> coord(0, m - 1);
    for (int trial = 0; trial < 40; ++trial) {
      Vec x(alg.ring.rank()), y(alg.ring.rank());
      for (auto& c : x) c = coord(rng);
      for (auto& c : y) c = coord(rng);
      CHECK(alg.ring.multiply(x, y) == skew_product(sys, x, y));
    }
  }
}

TEST_CASE("construction claims and the idempotent equivalence") {
  for (auto const& sys : assorted_systems()) {
    auto alg = build_skew_algebra(sys);
    CHECK(alg.strongly_graded);
    CHECK(alg.object_unital);
    auto eq = strong_idempotent_equivalence_check(alg);
    CHECK(eq.agree);
    CHECK(eq.units_match);
    CHECK(eq.holds());
    // components are R_cod(g) g
    for (std::size_t g = 0; g < sys.category.morphism_count(); ++g) {
      CHECK(alg.grading.at(g).order() == sys.ring_at(sys.category.cod(g)).order());
    }
  }
}

TEST_CASE("artinian_criteria_report") {
  for (auto const& sys : assorted_systems()) {
    auto alg = build_skew_algebra(sys);
    if (alg.ring.order() > 512) {
      continue;
    }
    auto r = artinian_criteria_report(alg);
    CHECK(r.consistent);
    REQUIRE(r.corners.size() == sys.category.object_count());
    oracle::Tables t(alg.ring.spec());
    CHECK(r.whole.left_size == oracle::one_sided_ideals(t, Side::left).size());
    CHECK(r.whole.right_size == oracle::one_sided_ideals(t, Side::right).size());
    for (auto const& c : r.corners) {
      CHECK(c.eq1a);
      CHECK(c.local_matches);
      CHECK(c.endomorphisms == sys.category.hom(c.object, c.object).size());
      auto local = local_skew_algebra(alg, c.object);
      CHECK(c.lattice.left_size == lattice_stats(local.ring).left_size);
      CHECK(c.lattice.right_size == lattice_stats(local.ring).right_size);
    }
  }
  // M_2(Z/2): the corner at either object is Z/2
  auto alg = build_category_algebra(make_ring(2, 1, {1}), pair_groupoid(2));
  auto r   = artinian_criteria_report(alg);
  oracle::Tables t(alg.ring.spec());
  CHECK(r.whole.left_size == oracle::one_sided_ideals(t, Side::left).size());
  CHECK(r.corners[0].lattice.left_size == 2);
}
