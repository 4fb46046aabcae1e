// Complete sets of idempotents, Peirce components and strongness.
//
// A complete set {e_0, ..., e_{k-1}} consists of nonzero orthogonal
// idempotents with S = (+)_i S e_i = (+)_i e_i S.  The Peirce component
// S_ij = e_i S e_j; S_i = S_ii is the corner ring at i.

#ifndef PEIRCE_IDEMPOTENTS_HPP_
#define PEIRCE_IDEMPOTENTS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "peirce/detail/strong.hpp"
#include "peirce/error.hpp"
#include "peirce/finring.hpp"

namespace peirce {

  struct IdempotentAudit {
    bool nonzero        = false;
    bool idempotent     = false;
    bool orthogonal     = false;
    bool left_complete  = false;
    bool right_complete = false;
    // First failure in the order above, with its error kind and detail.
    std::optional<Error> failure;

    bool valid() const noexcept {
      return !failure.has_value();
    }
  };

  // Evaluates every axiom; never throws for axiom failures.
  IdempotentAudit audit_complete_set(FiniteRing const&        ring,
                                     std::span<Element const> candidates);

  class IdempotentSet {
   public:
    FiniteRing const& ring() const noexcept {
      return _ring;
    }
    std::vector<Element> const& elements() const noexcept {
      return _elements;
    }
    Element const& operator[](std::size_t i) const {
      return _elements[i];
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }
    IdempotentAudit const& audit() const noexcept {
      return _audit;
    }

   private:
    friend IdempotentSet validate_complete_set(FiniteRing const&,
                                               std::span<Element const>);
    IdempotentSet(FiniteRing ring, std::vector<Element> e, IdempotentAudit a)
        : _ring(std::move(ring)), _elements(std::move(e)), _audit(std::move(a)) {}

    FiniteRing           _ring;
    std::vector<Element> _elements;
    IdempotentAudit      _audit;
  };

  // Throws ZeroIdempotent, NotIdempotent, NotOrthogonal or NotComplete
  // (checked in that order), RingMismatch for foreign elements.
  IdempotentSet validate_complete_set(FiniteRing const&        ring,
                                      std::span<Element const> candidates);

  struct PeirceTable {
    IdempotentSet           set;
    std::vector<Subgroup>   components;  // row-major k x k
    std::vector<CornerRing> corners;     // S_i with identity e_i

    std::size_t size() const noexcept {
      return set.size();
    }
    Subgroup const& at(std::size_t i, std::size_t j) const {
      return components[i * size() + j];
    }
  };

  PeirceTable peirce_table(IdempotentSet const& set);

  using StrongnessReport = TriReport;

  StrongnessReport strong_condition_report(PeirceTable const& table);

  // Condition (3) only.
  bool is_strong(PeirceTable const& table);
  bool is_strong(IdempotentSet const& set);

  // Order isomorphism between the one-sided ideals of S_i and the
  // S_j-submodules of S_ji (left) or S_ij (right), via
  //   left:  alpha(I) = e_j S I,  beta(M) = e_i S M
  //   right: alpha(I) = I S e_j,  beta(M) = M S e_i.
  struct LatticeCorrespondence {
    std::size_t   i = 0, j = 0;
    Side          side = Side::left;
    SubgroupPoset ideals;      // one-sided ideals of S_i, as subgroups of S
    SubgroupPoset submodules;  // S_j-submodules of the off-diagonal block
    // Node index of the image, or nullopt when it lands outside the poset.
    std::vector<std::optional<std::size_t>> alpha, beta;

    bool mutually_inverse = false;
    bool alpha_monotone   = false;
    bool beta_monotone    = false;
    bool sizes_equal      = false;
    bool heights_equal    = false;

    bool holds() const noexcept {
      return mutually_inverse && alpha_monotone && beta_monotone && sizes_equal
          && heights_equal;
    }
  };

  // Throws NotStrong or ZeroComponent (S_ij = 0), LatticeTooLarge.
  LatticeCorrespondence corner_lattice_correspondence(
      PeirceTable const& table,
      std::size_t        i,
      std::size_t        j,
      Side               side,
      std::size_t        cap = kDefaultLatticeCap);

  struct LatticeStats {
    std::size_t left_size = 0, left_height = 0;
    std::size_t right_size = 0, right_height = 0;
  };

  LatticeStats lattice_stats(FiniteRing const& ring,
                             std::size_t       cap = kDefaultLatticeCap);

  struct ChainProfile {
    std::size_t               index_count = 0;
    std::vector<LatticeStats> corners;
    LatticeStats              whole;
    bool                      strong = false;
    // S = (+)_{k,l} S_kl with the block orders multiplying to |S|.
    bool peirce_direct_sum = false;
    // sum of the e_j is the identity of S_0 = (+)_i S_i.
    bool diagonal_unit = false;
    // Every lattice above is finite and the two decomposition checks pass,
    // so both sides of the chain condition equivalence evaluate true.
    bool consistent = false;
  };

  ChainProfile chain_profile(IdempotentSet const& set,
                             std::size_t          cap = kDefaultLatticeCap);

}  // namespace peirce

#endif  // PEIRCE_IDEMPOTENTS_HPP_
