// Skew category systems and skew category algebras.
//
// A system assigns a unital ring R_a to every object and a ring isomorphism
// alpha_g : R_dom(g) -> R_cod(g) to every morphism, functorially.  Maps are
// matrices over Z/m in row convention: row i is the image of basis element
// i of the domain, so the matrix of alpha_g after alpha_h is A_h A_g.
//
// The algebra R *_alpha G has basis (b_k, g): morphisms in order, then the
// basis of R_cod(g).  Multiplication: (r g)(r' h) = r alpha_g(r') (g h) when
// g h is defined, 0 otherwise.

#ifndef PEIRCE_SKEWALG_HPP_
#define PEIRCE_SKEWALG_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "peirce/finring.hpp"
#include "peirce/graded.hpp"
#include "peirce/idempotents.hpp"
#include "peirce/smallcat.hpp"

namespace peirce {

  using RingMap = std::vector<Coord>;  // row-major, rank(dom) x rank(cod)

  RingMap identity_map(std::size_t rank);
  // x -> x A
  Vec apply_map(RingMap const& map, Vec const& x, std::size_t cod_rank, Coord m);
  // matrix of (second after first)
  RingMap compose_maps(RingMap const& second,
                       RingMap const& first,
                       std::size_t    dom_rank,
                       std::size_t    mid_rank,
                       std::size_t    cod_rank,
                       Coord          m);

  // Empty string when the map is a unital ring isomorphism, else the defect.
  std::string ring_iso_defect(FiniteRing const& from, FiniteRing const& to, RingMap const& map);

  struct SkewCategorySystem {
    SmallCategory           category;
    std::vector<FiniteRing> object_rings;  // per object
    std::vector<RingMap>    maps;          // per morphism

    FiniteRing const& ring_at(std::size_t a) const {
      return object_rings.at(a);
    }
    Vec apply(std::size_t g, Vec const& x) const;
  };

  // Errors, in checking order: ShapeMismatch, ModulusMismatch, NotUnital(a),
  // NotRingIso(g), IdentityNotIdentity(a), NotFunctorial(g, h).
  SkewCategorySystem validate_system(SmallCategory           category,
                                     std::vector<FiniteRing> object_rings,
                                     std::vector<RingMap>    maps);

  SkewCategorySystem constant_system(FiniteRing const& ring, SmallCategory const& category);

  struct SkewAlgebra {
    FiniteRing               ring;
    Grading                  grading;  // (R *_alpha G)_g = R_cod(g) g
    SkewCategorySystem       system;
    std::vector<std::size_t> offsets;      // first basis index of each morphism
    std::vector<Vec>         local_units;  // 1_{R_a} a per object
    // Instance checks of the claims that come with the construction.
    bool strongly_graded = false;
    bool object_unital   = false;

    // index of (b_k, g)
    std::size_t index(std::size_t g, std::size_t k) const {
      return offsets.at(g) + k;
    }
  };

  SkewAlgebra build_skew_algebra(SkewCategorySystem const& system);
  SkewAlgebra build_category_algebra(FiniteRing const& ring, SmallCategory const& category);

  struct StrongEquivalenceCheck {
    bool idempotents_strong     = false;  // is_strong on {1_{R_a} a}
    bool category_homset_strong = false;
    bool agree                  = false;
    bool units_match            = false;  // induced units equal 1_{R_a} a
    // Present when both sides hold.
    std::optional<GradedStrongReport> graded;
    bool                              graded_passes = true;

    bool holds() const noexcept {
      return agree && units_match && graded_passes;
    }
  };

  StrongEquivalenceCheck strong_idempotent_equivalence_check(SkewAlgebra const& algebra);

  // R_a *_{alpha(a)} G(a) built on its own, with the one-object category
  // whose morphisms are G(a) in ascending order.
  SkewAlgebra local_skew_algebra(SkewAlgebra const& algebra, std::size_t a);

  struct LocalCorner {
    std::size_t  object = 0;
    std::size_t  endomorphisms = 0;
    bool         eq1a = false;          // 1_a S 1_a = S_G(a)
    bool         local_matches = false; // structure constants of the local algebra
    LatticeStats lattice;               // of the corner ring
  };

  struct ArtinianReport {
    std::size_t              objects = 0, morphisms = 0;
    bool                     homset_strong = false;
    std::vector<LocalCorner> corners;
    LatticeStats             whole;
    bool                     consistent = false;
  };

  ArtinianReport artinian_criteria_report(SkewAlgebra const& algebra,
                                          std::size_t        cap = kDefaultLatticeCap);

}  // namespace peirce

#endif  // PEIRCE_SKEWALG_HPP_
