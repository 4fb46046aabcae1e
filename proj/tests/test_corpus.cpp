#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracle.hpp"
#include "peirce/corpus.hpp"
#include "peirce/graded.hpp"
#include "peirce/idempotents.hpp"

using namespace peirce;
using namespace peirce::corpus;

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

  std::vector<Instance> const& cached(std::string const& name) {
    static std::map<std::string, std::vector<Instance>> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
      it = cache.emplace(name, generate_suite(name)).first;
    }
    return it->second;
  }

  IdempotentSet set_of(Instance const& inst) {
    std::vector<Element> es;
    for (auto const& v : inst.idempotents) {
      es.push_back(inst.ring->element(v));
    }
    return validate_complete_set(*inst.ring, es);
  }

  struct SeedOverride {
    explicit SeedOverride(char const* v) {
      setenv("WORKBENCH_SEED", v, 1);
    }
    ~SeedOverride() {
      unsetenv("WORKBENCH_SEED");
    }
  };

}  // namespace

TEST_CASE("generate examples") {
  auto m2 = generate({RecipeKind::matrix_ring, {2, 2, 2}}, 1);
  REQUIRE(m2.ring);
  CHECK(m2.ring->spec().constants == oracle::matrix_units(2, 2).constants);
  CHECK(m2.idempotents == std::vector<Vec>{{1, 0, 0, 0}, {0, 0, 0, 1}});

  auto mx = generate({RecipeKind::mx_category, {1, 2}}, 1);  // C2, s = 2
  REQUIRE(mx.category);
  CHECK(mx.category->morphism_count() == 8);
  CHECK(is_groupoid(*mx.category).groupoid);

  // (Z/3)[{0,1}.]: b_x b_y = b_{xy} read off the Cayley table
  auto z01 = named_monoid("Z01");
  auto ma  = generate({RecipeKind::monoid_algebra, {3, 6}}, 1);
  REQUIRE(ma.ring);
  CHECK(ma.ring->modulus() == 3);
  REQUIRE(ma.ring->rank() == 2);
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      for (std::size_t k = 0; k < 2; ++k) {
        CHECK(ma.ring->constant(x, y, k) == (z01.table[x * 2 + y] == k ? 1 : 0));
      }
    }
  }

  CHECK(kind_of([] { generate({RecipeKind::matrix_ring, {2, 4, 1}}, 0); })
        == ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([] { generate({RecipeKind::matrix_ring, {1, 2, 1}}, 0); })
        == ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([] { generate({RecipeKind::skew_algebra, {2, 7, 2, 1, 256}}, 0); })
        == ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([] { generate({RecipeKind::corner, {2}}, 0); })
        == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("determinism") {
  std::vector<Recipe> recipes{{RecipeKind::skew_algebra, {2, 0, 4, 2, 4096}},
                              {RecipeKind::skew_algebra, {3, 1, 2, 3, 65536}},
                              {RecipeKind::direct_product, {2, 256, 4}},
                              {RecipeKind::corner, {3, 256}},
                              {RecipeKind::random_category, {4, 20, -1}},
                              {RecipeKind::random_groupoid, {4, 20}},
                              {RecipeKind::monoid_algebra, {2, -1}}};
  for (auto const& r : recipes) {
    for (std::uint64_t seed : {0ULL, 7ULL, 0xffffffffffffULL}) {
      CHECK(io::canonical(serialize(generate(r, seed)))
            == io::canonical(serialize(generate(r, seed))));
    }
  }
}

TEST_CASE("suites: sizes and bounds") {
  CHECK(kind_of([] { suite_plan("prop-9.9"); }) == ErrorKind::UnknownSuite);

  auto const& p24 = cached("prop-2.4");
  CHECK(p24.size() >= 200);
  std::size_t strong = 0;
  for (auto const& inst : p24) {
    REQUIRE(inst.ring);
    CHECK(inst.ring->order() <= 256);
    CHECK(inst.idempotents.size() >= 1);
    CHECK(inst.idempotents.size() <= 4);
    strong += is_strong(set_of(inst));
  }
  CHECK(strong > 20);
  CHECK(p24.size() - strong > 20);

  auto const& p32 = cached("prop-3.2");
  CHECK(p32.size() >= 500);
  std::size_t hs = 0, groupoids = 0;
  for (auto const& inst : p32) {
    REQUIRE(inst.category);
    CHECK(inst.category->object_count() <= 4);
    CHECK(inst.category->morphism_count() <= 20);
    hs += is_homset_strong(*inst.category);
    groupoids += is_groupoid(*inst.category).groupoid;
  }
  CHECK(hs > 50);
  CHECK(p32.size() - hs > 50);
  CHECK(hs > groupoids);  // hom-set strong categories beyond groupoids

  auto const& grp = cached("groupoids");
  CHECK(grp.size() >= 100);
  for (auto const& inst : grp) {
    CHECK(is_groupoid(*inst.category).groupoid);
  }

  CHECK(cached("notgroupoid").size() == 15);

  auto const& p53 = cached("prop-5.3");
  std::size_t hs53 = 0;
  for (auto const& inst : p53) {
    REQUIRE(inst.algebra);
    hs53 += is_homset_strong(inst.algebra->grading.category);
  }
  CHECK(hs53 > 10);
  CHECK(p53.size() - hs53 > 10);
}

TEST_CASE("validity of every unmutated instance") {
  for (auto const& name : suite_names()) {
    for (auto const& inst : cached(name)) {
      if (!inst.idempotents.empty()) {
        CHECK_NOTHROW(set_of(inst));
      }
      if (inst.category) {
        CHECK_NOTHROW(make_category(inst.category->spec()));
      }
      if (inst.ring) {
        CHECK_NOTHROW(make_ring(inst.ring->spec()));
      }
      if (inst.algebra) {
        CHECK(inst.algebra->strongly_graded);
        CHECK(inst.algebra->object_unital);
      }
    }
  }
}

TEST_CASE("WORKBENCH_SEED overrides the base seed") {
  auto plain = suite_plan("groupoids");
  {
    SeedOverride o("12345");
    auto         moved = suite_plan("groupoids");
    REQUIRE(moved.size() == plain.size());
    CHECK(moved[0].seed == 12345);
    CHECK(moved[3].seed == 12348);
  }
  {
    SeedOverride o("twelve");
    CHECK(kind_of([] { suite_plan("groupoids"); }) == ErrorKind::ParameterOutOfRange);
  }
  CHECK(suite_plan("groupoids")[0].seed == plain[0].seed);
}

TEST_CASE("checked-in manifests match the generator") {
  if (std::getenv("WORKBENCH_SEED")) {
    return;
  }
  for (auto const& name : suite_names()) {
    std::ifstream in(std::string(PEIRCE_SOURCE_DIR) + "/suites/" + name + ".manifest");
    REQUIRE_MESSAGE(in.good(), "missing manifest for " << name);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK_MESSAGE(ss.str() == manifest(name), "manifest drift in " << name);
  }
}

TEST_CASE("mutation examples") {
  auto m2 = generate({RecipeKind::matrix_ring, {2, 2, 2}}, 1);
  auto o  = mutate(m2, {Axiom::orthogonality, 0});
  CHECK(o.elements == std::vector<Vec>{{1, 0, 0, 0}, {1, 0, 0, 0}});
  CHECK(revalidate(o) == ErrorKind::NotOrthogonal);

  // Z/3 x Z/3 under C_2: both automorphisms are involutions
  auto     c2 = build_MX(named_monoid("C2"), 1);
  auto     d  = make_ring(3, 2, {1, 0, 0, 0, 0, 0, 0, 1});
  Instance swap;
  swap.algebra = build_skew_algebra(validate_system(c2, {d}, {{1, 0, 0, 1}, {0, 1, 1, 0}}));
  CHECK(kind_of([&] { mutate(swap, {Axiom::functoriality, 0}); }) == ErrorKind::CannotTarget);
  CHECK(revalidate(mutate(swap, {Axiom::identity_map, 0})) == ErrorKind::IdentityNotIdentity);
  CHECK(revalidate(mutate(swap, {Axiom::ring_iso, 1})) == ErrorKind::NotRingIso);

  // (Z/3)^3 under C_2 admits a 3-cycle twist
  auto     d3 = make_ring(3, 3, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0,
                                 0, 0, 0, 0, 0, 0, 0, 0, 1});
  Instance three;
  three.algebra = build_category_algebra(d3, c2);
  auto f        = mutate(three, {Axiom::functoriality, 0});
  CHECK(revalidate(f) == ErrorKind::NotFunctorial);

  auto cat = generate({RecipeKind::mx_category, {2, 1}}, 0);  // C3
  auto br  = mutate(cat, {Axiom::composition, 0});
  CHECK(revalidate(br) == ErrorKind::NotAssociative);
  auto il = mutate(cat, {Axiom::identity_law, 0});
  CHECK(revalidate(il) == ErrorKind::IdentityLawViolation);
  CHECK(kind_of([] { mutate(generate({RecipeKind::mx_category, {0, 1}}, 0),
                            {Axiom::identity_law, 0}); })
        == ErrorKind::CannotTarget);
  CHECK(kind_of([&] { mutate(cat, {Axiom::orthogonality, 0}); }) == ErrorKind::CannotTarget);
}

TEST_CASE("mutation matrix is sound") {
  auto matrix = mutation_matrix();
  std::set<Axiom> covered;
  for (auto const& e : matrix.entries) {
    auto got = revalidate(e.mutated);
    CHECK_MESSAGE(got == e.mutated.expected,
                  to_string(e.mutated.mutation.target) << " on " << e.suite << "[" << e.index
                                                       << "]: " << e.mutated.description);
    covered.insert(e.mutated.mutation.target);
  }
  CHECK(covered.size() == all_axioms().size());
}
