// Deterministic instance families and invalidating mutations.
//
// Every instance comes from a constructive recipe (matrix rings, monoid and
// category algebras, skew algebras, products, corners); nothing is sampled
// from raw structure constants.  Randomness is std::mt19937_64 seeded with
// the 64-bit instance seed, reduced with `% n`, so suites are reproducible
// across platforms.
//
// Recipe parameters (all integers):
//   matrix_ring     [m, n, blocks]       M_n(Z/m), diagonal units summed into
//                                        `blocks` consecutive groups
//   monoid_algebra  [m, monoid]          (Z/m)[M]; monoid = catalogue index,
//                                        -1 for a random transformation monoid
//   skew_algebra    [m, variant, max_objects, max_rank, order_cap]
//                   variant 0: constant system over a random category,
//                              object ring (Z/m)^r
//                   variant 1: MX(G, s) for a group G acting on (Z/m)^[G:H]
//                              through cosets of a cyclic subgroup H
//                   variant 2: constant system over a random preorder
//   direct_product  [m, order_cap, max_idempotents]
//   corner          [m, order_cap]       e S e for e a sum of local units of a
//                                        category algebra
//   mx_category     [monoid, s]
//   random_groupoid [max_objects, max_morphisms]
//   random_category [max_objects, max_morphisms, flavor]  flavor -1 = any

#ifndef PEIRCE_CORPUS_HPP_
#define PEIRCE_CORPUS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "peirce/error.hpp"
#include "peirce/finring.hpp"
#include "peirce/io.hpp"
#include "peirce/skewalg.hpp"
#include "peirce/smallcat.hpp"

namespace peirce::corpus {

  enum class RecipeKind {
    matrix_ring,
    monoid_algebra,
    skew_algebra,
    direct_product,
    corner,
    mx_category,
    random_groupoid,
    random_category
  };

  std::string_view          to_string(RecipeKind kind) noexcept;
  std::optional<RecipeKind> recipe_kind(std::string_view name);

  inline constexpr std::uint64_t kOrderLimit = 4096;

  struct Recipe {
    RecipeKind                kind = RecipeKind::matrix_ring;
    std::vector<std::int64_t> params;
  };

  std::string describe(Recipe const& r);  // "matrix_ring 2 2 1"

  struct Instance {
    Recipe                     recipe;
    std::uint64_t              seed = 0;
    std::optional<FiniteRing>  ring;
    std::vector<Vec>           idempotents;  // a complete set when nonempty
    std::optional<SmallCategory> category;
    std::optional<SkewAlgebra> algebra;  // ring and category come from it
  };

  // Throws ParameterOutOfRange.
  Instance generate(Recipe const& recipe, std::uint64_t seed);

  io::Json serialize(Instance const& instance);

  struct SuiteEntry {
    Recipe        recipe;
    std::uint64_t seed = 0;
  };

  std::vector<std::string> suite_names();
  // WORKBENCH_SEED, when set, replaces the suite's base seed.
  std::vector<SuiteEntry> suite_plan(std::string_view name);  // UnknownSuite
  std::vector<Instance>   generate_suite(std::string_view name);
  // One line per entry: recipe, seed and instance digest.
  std::string manifest(std::string_view name);

  enum class Axiom {
    zero_idempotent,
    idempotence,
    orthogonality,
    completeness,
    ring_associativity,
    composition,
    identity_law,
    ring_iso,
    identity_map,
    functoriality
  };

  std::string_view          to_string(Axiom a) noexcept;
  std::optional<Axiom>      axiom_named(std::string_view name);
  std::vector<Axiom>        all_axioms();

  struct Mutation {
    Axiom         target = Axiom::orthogonality;
    std::uint64_t seed   = 0;
  };

  // Raw data for the validator of the targeted axiom.
  struct Mutated {
    Mutation    mutation;
    ErrorKind   expected = ErrorKind::InvariantViolation;
    std::string description;
    // idempotent axioms
    std::optional<FiniteRing> ring;
    std::vector<Vec>          elements;
    // ring_associativity
    std::optional<RingSpec> ring_spec;
    // composition, identity_law
    std::optional<CategorySpec> category_spec;
    // system axioms
    std::optional<SkewCategorySystem> system;
    std::vector<RingMap>              maps;
  };

  // Throws CannotTarget when the instance has nothing the axiom applies to.
  Mutated mutate(Instance const& instance, Mutation const& mutation);

  // Runs the targeted validator; the kind of the first failure, if any.
  std::optional<ErrorKind> revalidate(Mutated const& m);

  struct MatrixEntry {
    std::string suite;
    std::size_t index = 0;
    Mutated     mutated;
  };

  // Every axiom applied to instances of the suites it concerns; untargetable
  // pairs are skipped and counted.
  struct MutationMatrix {
    std::vector<MatrixEntry> entries;
    std::size_t              untargetable = 0;
  };

  MutationMatrix mutation_matrix(std::size_t per_axiom = 12);

}  // namespace peirce::corpus

#endif  // PEIRCE_CORPUS_HPP_
