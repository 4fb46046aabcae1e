// Finite small categories given by composition tables.
//
// Convention: G(a, b) is the set of morphisms b -> a, i.e. with domain b and
// codomain a.  This is the reverse of the usual Hom(a, b); keep it in mind
// when reading hom_set() and every report indexed by object pairs.
//
// Morphisms and objects are numbered from 0.  compose(g, h) is g after h and
// is defined exactly when dom(g) == cod(h).

#ifndef PEIRCE_SMALLCAT_HPP_
#define PEIRCE_SMALLCAT_HPP_

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "peirce/detail/strong.hpp"

namespace peirce {

  inline constexpr std::size_t kUndefined = std::numeric_limits<std::size_t>::max();

  struct CategorySpec {
    std::size_t              objects = 0;
    std::vector<std::size_t> dom, cod;  // per morphism
    std::vector<std::size_t> identity;  // per object
    std::vector<std::size_t> compose;   // q*q, entry g*q + h is g h or kUndefined
    std::vector<std::string> labels;    // optional morphism names
  };

  class SmallCategory {
   public:
    std::size_t object_count() const noexcept;
    std::size_t morphism_count() const noexcept;
    std::size_t dom(std::size_t g) const;
    std::size_t cod(std::size_t g) const;
    std::size_t identity(std::size_t a) const;
    bool        composable(std::size_t g, std::size_t h) const;
    // kUndefined when not composable
    std::size_t compose(std::size_t g, std::size_t h) const;
    std::string const& label(std::size_t g) const;
    CategorySpec const& spec() const noexcept;

    // G(a, b): morphisms b -> a, ascending.
    std::vector<std::size_t> const& hom(std::size_t a, std::size_t b) const;

    struct Impl;

   private:
    friend SmallCategory make_category(CategorySpec spec);
    explicit SmallCategory(std::shared_ptr<Impl const> impl);
    std::shared_ptr<Impl const> _impl;
  };

  // Checks shapes, identities, definedness, closure, identity laws and
  // associativity.  Errors: ShapeMismatch, ParameterOutOfRange,
  // CompositionDomainMismatch (defined where it must not be, or landing in
  // the wrong hom-set), CompositionMissing, IdentityLawViolation,
  // NotAssociative.
  SmallCategory make_category(CategorySpec spec);

  std::vector<std::size_t> hom_set(SmallCategory const& cat,
                                   std::size_t          a,
                                   std::size_t          b);

  struct GroupoidCheck {
    bool                       groupoid = false;
    std::vector<std::size_t>   inverse;  // filled when groupoid
    std::optional<std::size_t> witness;  // first morphism without inverse
  };

  GroupoidCheck is_groupoid(SmallCategory const& cat);

  using HomSetStrongReport = TriReport;

  HomSetStrongReport homset_strong_report(SmallCategory const& cat);
  bool               is_homset_strong(SmallCategory const& cat);

  // A finite monoid by its Cayley table: table[x*size + y] = x y.
  struct Monoid {
    std::string              name;
    std::size_t              size     = 1;
    std::size_t              identity = 0;
    std::vector<std::size_t> table{0};
  };

  // Throws ShapeMismatch, ParameterOutOfRange or NotAMonoid with a witness.
  void validate_monoid(Monoid const& m);
  bool is_group(Monoid const& m);

  // C1 C2 C3 C4 V4 S3 Z01 (the multiplicative monoid {0, 1}),
  // T2 (all maps of a 2-point set), N3 ({1, a, 0} with a a = 0).
  Monoid                   named_monoid(std::string_view name);
  std::vector<std::string> monoid_names();

  // The category MX: objects X = {0..s-1}, morphisms (m, x, y) : y -> x at
  // index m*s*s + x*s + y, (m, x, y)(n, y, z) = (mn, x, z).
  SmallCategory build_MX(Monoid const& monoid, std::size_t set_size);

  SmallCategory trivial_category();
  // Objects A = 0, B = 1; morphisms id_A, id_B, f : A -> B.
  SmallCategory arrow_category();
  SmallCategory pair_groupoid(std::size_t objects);
  SmallCategory disjoint_union(std::vector<SmallCategory> const& parts);
  SmallCategory opposite(SmallCategory const& cat);

  // G(a) as a monoid, elements numbered by position in hom(a, a).
  Monoid endomorphism_monoid(SmallCategory const& cat, std::size_t a);

  struct FinitenessReport {
    std::size_t              objects = 0, morphisms = 0;
    std::vector<std::size_t> endomorphisms;  // |G(a)| per object
    bool                     homset_strong = false;
    // Checked only for hom-set strong categories: for every pair (c, d)
    // with G(c, d) nonempty, g -> g v is injective G(c, d) -> G(c) with
    // left inverse h -> h u where v u = d.
    bool                     injections = true;
    bool                     hom_bound  = true;  // |G(c,d)| <= |G(c)|
    bool                     global_bound = true;  // |G_1| <= |G_0|^2 max |G(a)|
    std::vector<std::size_t> witness;            // failing (c, d)

    bool holds() const noexcept {
      return injections && hom_bound && global_bound;
    }
  };

  FinitenessReport finiteness_report(SmallCategory const& cat);

  struct GroupPredicates {
    bool is_group             = false;
    bool torsion_free         = false;
    bool polycyclic_by_finite = false;
  };

  // Throws NotAGroup when G(a) is not a group.
  GroupPredicates group_predicates(SmallCategory const& cat, std::size_t a);

}  // namespace peirce

#endif  // PEIRCE_SMALLCAT_HPP_
