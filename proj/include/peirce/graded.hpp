// Rings graded by a small category: S = (+)_g S_g over the morphisms g with
// S_g S_h in S_gh when g h is defined and S_g S_h = 0 otherwise.
//
// S_a denotes the component at the identity of object a and
// S_G(a,b) = (+)_{g in G(a,b)} S_g (morphisms b -> a).

#ifndef PEIRCE_GRADED_HPP_
#define PEIRCE_GRADED_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "peirce/detail/strong.hpp"
#include "peirce/finring.hpp"
#include "peirce/idempotents.hpp"
#include "peirce/smallcat.hpp"

namespace peirce {

  struct Grading {
    FiniteRing            ring;
    SmallCategory         category;
    std::vector<Subgroup> components;  // per morphism

    Subgroup const& at(std::size_t g) const {
      return components.at(g);
    }
  };

  // Errors: ShapeMismatch, RingMismatch, NotDirectSum, GradingViolation
  // (with the morphism pair and the stray product).
  Grading attach_grading(FiniteRing                   ring,
                         SmallCategory                category,
                         std::vector<Subgroup> const& components);

  // S with all of S at the single identity.
  Grading trivial_grading(FiniteRing ring);

  Subgroup object_component(Grading const& gr, std::size_t a);  // S_a
  Subgroup hom_component(Grading const& gr, std::size_t a, std::size_t b);

  struct ObjectUnitalCheck {
    bool                     holds = false;
    std::vector<Vec>         units;  // 1_{S_a} per object when holds
    std::vector<std::size_t> witness;  // {a} or {g}
    std::string              reason;
  };

  // A zero S_a counts as not unital.
  ObjectUnitalCheck object_unital_check(Grading const& gr);

  // S_g S_h == S_gh for all composable (g, h); witness is the first pair.
  Verdict strongly_graded_check(Grading const& gr);

  struct GradedStrongReport {
    TriReport conditions;  // over object pairs/triples on S_G(a,b)
    bool      eq1a = true;  // 1_{S_a} S 1_{S_b} = S_G(a,b) for all a, b
    std::vector<std::size_t> eq1a_witness;
  };

  // Throws NotObjectUnital or CategoryNotHomSetStrong.
  GradedStrongReport homset_strongly_graded_report(Grading const& gr);

  // Eq. (1A) alone; requires object unital (throws NotObjectUnital).
  Verdict eq1a_check(Grading const& gr);

  // {1_{S_a}} validated as a complete set; throws NotObjectUnital.
  IdempotentSet induced_idempotents(Grading const& gr);

  struct GradedFlags {
    bool                         object_unital   = false;
    bool                         strongly_graded = false;
    Verdict                      homset_strongly_graded;
    std::optional<IdempotentSet> induced_set;
  };

  GradedFlags graded_flags(Grading const& gr);

}  // namespace peirce

#endif  // PEIRCE_GRADED_HPP_
