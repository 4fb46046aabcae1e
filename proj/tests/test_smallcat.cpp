#include <set>

#include "doctest.h"
#include "peirce/error.hpp"
#include "peirce/smallcat.hpp"

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

  // Condition (3) straight from the morphism lists, without hom tables.
  bool strong_by_scan(SmallCategory const& cat) {
    std::size_t q = cat.morphism_count();
    for (std::size_t x = 0; x < cat.object_count(); ++x) {
      for (std::size_t y = 0; y < cat.object_count(); ++y) {
        bool xy = false, yx = false, unit = false;
        for (std::size_t g = 0; g < q; ++g) {
          xy = xy || (cat.dom(g) == y && cat.cod(g) == x);
          yx = yx || (cat.dom(g) == x && cat.cod(g) == y);
          for (std::size_t h = 0; h < q; ++h) {
            if (cat.dom(g) == y && cat.cod(g) == x && cat.dom(h) == x
                && cat.cod(h) == y && cat.compose(g, h) == cat.identity(x)) {
              unit = true;
            }
          }
        }
        if ((xy || yx) && !(xy && yx && unit)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<SmallCategory> assorted() {
    std::vector<SmallCategory> out{trivial_category(), arrow_category(),
                                   pair_groupoid(2), pair_groupoid(3)};
    for (auto const& name : monoid_names()) {
      for (std::size_t s : {1, 2}) {
        out.push_back(build_MX(named_monoid(name), s));
      }
    }
    out.push_back(disjoint_union({arrow_category(), pair_groupoid(2)}));
    out.push_back(opposite(arrow_category()));
    out.push_back(disjoint_union({build_MX(named_monoid("Z01"), 1), arrow_category()}));
    return out;
  }

}  // namespace

TEST_CASE("make_category examples") {
  auto t = trivial_category();
  CHECK(t.object_count() == 1);
  CHECK(t.morphism_count() == 1);
  auto a = arrow_category();
  CHECK(a.morphism_count() == 3);

  auto spec = a.spec();
  spec.compose[2 * 3 + 2] = 2;  // f f
  CHECK(kind_of([&] { make_category(spec); }) == ErrorKind::CompositionDomainMismatch);

  spec = a.spec();
  spec.compose[2 * 3 + 0] = kUndefined;  // f id_A
  CHECK(kind_of([&] { make_category(spec); }) == ErrorKind::CompositionMissing);

  spec = a.spec();
  spec.identity = {1, 0};
  CHECK(kind_of([&] { make_category(spec); }) == ErrorKind::IdentityLawViolation);

  spec = a.spec();
  spec.compose.pop_back();
  CHECK(kind_of([&] { make_category(spec); }) == ErrorKind::ShapeMismatch);

  spec = a.spec();
  spec.dom[2] = 5;
  CHECK(kind_of([&] { make_category(spec); }) == ErrorKind::ParameterOutOfRange);

  // C_3 one-object with 1 + 1 changed from 2 to 0: (1 1) 2 = 2, 1 (1 2) = 1
  auto c3 = build_MX(named_monoid("C3"), 1).spec();
  c3.compose[1 * 3 + 1] = 0;
  CHECK(kind_of([&] { make_category(c3); }) == ErrorKind::NotAssociative);
}

TEST_CASE("hom_set keeps the reversed convention") {
  auto a = arrow_category();
  CHECK(hom_set(a, 1, 0) == std::vector<std::size_t>{2});  // G(B, A) = {f : A -> B}
  CHECK(hom_set(a, 0, 1).empty());
  for (std::size_t x = 0; x < 2; ++x) {
    auto h = hom_set(a, x, x);
    CHECK(std::find(h.begin(), h.end(), a.identity(x)) != h.end());
  }
  auto pg = pair_groupoid(2);
  CHECK(pg.morphism_count() == 4);
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      CHECK(hom_set(pg, x, y).size() == 1);
      for (auto g : hom_set(pg, x, y)) {
        CHECK(pg.dom(g) == y);
        CHECK(pg.cod(g) == x);
      }
    }
  }
  CHECK(kind_of([&] { hom_set(a, 2, 0); }) == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("is_groupoid") {
  auto a = is_groupoid(arrow_category());
  CHECK_FALSE(a.groupoid);
  CHECK(a.witness == std::size_t{2});
  auto pg = pair_groupoid(2);
  auto g  = is_groupoid(pg);
  REQUIRE(g.groupoid);
  for (std::size_t m = 0; m < pg.morphism_count(); ++m) {
    CHECK(pg.compose(m, g.inverse[m]) == pg.identity(pg.cod(m)));
  }
  CHECK_FALSE(is_groupoid(build_MX(named_monoid("Z01"), 2)).groupoid);
}

TEST_CASE("homset_strong_report examples") {
  for (auto const& c : {pair_groupoid(2), build_MX(named_monoid("S3"), 2)}) {
    auto r = homset_strong_report(c);
    CHECK(r.condition1.holds);
    CHECK(r.condition2.holds);
    CHECK(r.condition3.holds);
  }
  auto a = homset_strong_report(arrow_category());
  CHECK_FALSE(a.condition1.holds);
  CHECK_FALSE(a.condition2.holds);
  CHECK_FALSE(a.condition3.holds);
  CHECK(a.condition3.witness == std::vector<std::size_t>{0, 1});
  auto mx = build_MX(named_monoid("Z01"), 2);
  CHECK(mx.morphism_count() == 8);
  auto r = homset_strong_report(mx);
  CHECK(r.condition3.holds);
  CHECK(r.agree);
}

TEST_CASE("build_MX") {
  auto t = build_MX(named_monoid("C1"), 2);
  CHECK(t.morphism_count() == 4);
  CHECK(is_groupoid(t).groupoid);
  auto c2 = build_MX(named_monoid("C2"), 1);
  CHECK(c2.object_count() == 1);
  CHECK(c2.morphism_count() == 2);
  CHECK(is_groupoid(c2).groupoid);
  // (m, x, y)(n, y, z) = (mn, x, z): check a few index formulas for s = 3
  auto mx = build_MX(named_monoid("T2"), 3);
  auto m  = named_monoid("T2");
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      auto g = a * 9 + 2 * 3 + 1, h = b * 9 + 1 * 3 + 0;
      CHECK(mx.compose(g, h) == m.table[a * 4 + b] * 9 + 2 * 3 + 0);
    }
  }
  Monoid bad{"bad", 2, 0, {0, 1, 1, 0}};
  bad.table = {0, 1, 0, 0};  // 0 is identity on the left only
  CHECK(kind_of([&] { build_MX(bad, 2); }) == ErrorKind::NotAMonoid);
  Monoid nonassoc{"na", 3, 0, {0, 1, 2, 1, 2, 1, 2, 2, 1}};
  CHECK(kind_of([&] { validate_monoid(nonassoc); }) == ErrorKind::NotAMonoid);
}

TEST_CASE("MX is hom-set strong and a groupoid exactly for groups") {
  for (auto const& name : {"C1", "C2", "C3", "Z01", "T2"}) {
    auto m = named_monoid(name);
    for (std::size_t s : {1, 2, 3}) {
      auto mx = build_MX(m, s);
      CHECK(is_homset_strong(mx));
      CHECK(is_groupoid(mx).groupoid == is_group(m));
      auto f = finiteness_report(mx);
      CHECK(f.holds());
      for (std::size_t x = 0; x < s; ++x) {
        CHECK(f.endomorphisms[x] == m.size);
        for (std::size_t y = 0; y < s; ++y) {
          CHECK(mx.hom(x, y).size() == m.size);
        }
      }
    }
  }
}

TEST_CASE("catalogue monoids") {
  std::set<std::string> groups{"C1", "C2", "C3", "C4", "V4", "S3"};
  for (auto const& name : monoid_names()) {
    auto m = named_monoid(name);
    CHECK_NOTHROW(validate_monoid(m));
    CHECK(is_group(m) == groups.count(name));
  }
  CHECK(named_monoid("S3").size == 6);
  CHECK(named_monoid("T2").size == 4);
  CHECK(kind_of([] { named_monoid("Q8"); }) == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("tri-equivalence and groupoid implication on assorted categories") {
  for (auto const& c : assorted()) {
    auto r = homset_strong_report(c);
    CHECK(r.agree);
    CHECK(r.condition3.holds == strong_by_scan(c));
    if (is_groupoid(c).groupoid) {
      CHECK(r.condition3.holds);
    }
    auto f = finiteness_report(c);
    CHECK(f.homset_strong == r.condition3.holds);
    CHECK(f.holds());
    // opposite preserves hom-set strongness
    CHECK(is_homset_strong(opposite(c)) == r.condition3.holds);
  }
}

TEST_CASE("finiteness_report") {
  auto pg = finiteness_report(pair_groupoid(2));
  CHECK(pg.endomorphisms == std::vector<std::size_t>{1, 1});
  CHECK(pg.holds());
  auto ar = finiteness_report(arrow_category());
  CHECK_FALSE(ar.homset_strong);
}

TEST_CASE("group_predicates") {
  auto t = group_predicates(trivial_category(), 0);
  CHECK(t.is_group);
  CHECK(t.torsion_free);
  auto c2 = group_predicates(build_MX(named_monoid("C2"), 1), 0);
  CHECK_FALSE(c2.torsion_free);
  CHECK(c2.polycyclic_by_finite);
  CHECK(kind_of([] { group_predicates(build_MX(named_monoid("Z01"), 1), 0); })
        == ErrorKind::NotAGroup);
}

TEST_CASE("endomorphism monoid of MX at an object is M") {
  auto m  = named_monoid("T2");
  auto mx = build_MX(m, 2);
  auto e  = endomorphism_monoid(mx, 1);
  CHECK(e.size == 4);
  CHECK(e.identity == m.identity);
  CHECK(e.table == m.table);
}
