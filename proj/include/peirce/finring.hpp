// peirce - finite workbench for rings with enough idempotents and
// category graded rings.
//
// Finite rings given by structure constants over Z/m.  A ring of rank n has
// additive group (Z/m)^n with basis b_0, ..., b_{n-1} and multiplication
//
//   b_i * b_j = sum_k c[i][j][k] b_k.
//
// Rings are associative but need not be unital.  FiniteRing is a cheap handle
// to immutable validated data; elements and subgroups are bound to the handle
// they were created from and mixing handles raises RingMismatch.

#ifndef PEIRCE_FINRING_HPP_
#define PEIRCE_FINRING_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "peirce/zmod.hpp"

namespace peirce {

  enum class Side { left, right };

  std::string_view to_string(Side side) noexcept;

  inline constexpr std::size_t kDefaultLatticeCap = 100000;

  // Unvalidated ring data, as read from a file or produced by a recipe.
  struct RingSpec {
    Coord                    modulus = 2;
    std::size_t              rank    = 1;
    std::vector<std::string> labels;     // empty means b0, b1, ...
    std::vector<Coord>       constants;  // n^3 entries, index (i*n + j)*n + k
  };

  class Element;

  class FiniteRing {
   public:
    Coord modulus() const noexcept;
    std::size_t rank() const noexcept;
    std::vector<std::string> const& labels() const noexcept;
    RingSpec const& spec() const noexcept;
    // m^n; construction guarantees it fits.
    std::uint64_t order() const noexcept;

    Coord constant(std::size_t i, std::size_t j, std::size_t k) const noexcept;

    // Coordinate level arithmetic, no binding checks.
    Vec multiply(Vec const& x, Vec const& y) const;
    Vec add(Vec const& x, Vec const& y) const;
    Vec negate(Vec const& x) const;
    Vec basis_vector(std::size_t i) const;
    Vec zero_vector() const;

    Element element(Vec coords) const;
    Element basis(std::size_t i) const;
    Element zero() const;

    bool same_as(FiniteRing const& other) const noexcept {
      return _impl == other._impl;
    }

    struct Impl;

   private:
    friend FiniteRing make_ring(RingSpec spec);
    friend FiniteRing make_ring_unchecked(RingSpec spec);
    explicit FiniteRing(std::shared_ptr<Impl const> impl);
    std::shared_ptr<Impl const> _impl;
  };

  // Validates shape, range and associativity on all basis triples.
  // Throws ModulusTooSmall, ShapeMismatch, ParameterOutOfRange or
  // NotAssociative (with the offending triple).
  FiniteRing make_ring(RingSpec spec);
  FiniteRing make_ring(Coord                    modulus,
                       std::size_t              rank,
                       std::vector<Coord>       constants,
                       std::vector<std::string> labels = {});

  // Rank 0 is allowed here (zero ring); associativity must be known.
  FiniteRing make_ring_unchecked(RingSpec spec);

  class Element {
   public:
    Element(FiniteRing ring, Vec coords);

    FiniteRing const& ring() const noexcept {
      return _ring;
    }
    Vec const& coords() const noexcept {
      return _coords;
    }
    bool is_zero() const noexcept {
      return zmod::is_zero(_coords);
    }

    Element operator+(Element const& other) const;
    Element operator-(Element const& other) const;
    Element operator-() const;
    Element operator*(Element const& other) const;
    Element scaled(Coord factor) const;

    friend bool operator==(Element const& a, Element const& b);

   private:
    FiniteRing _ring;
    Vec        _coords;
  };

  std::string format(Element const& x);

  // Sum/product expression trees over elements.
  class Expr {
   public:
    static Expr leaf(Element x);
    static Expr sum(std::vector<Expr> terms);
    static Expr product(std::vector<Expr> factors);
    static Expr negate(Expr term);

    Element evaluate(FiniteRing const& ring) const;

   private:
    enum class Op { leaf, sum, product, negate };
    Op                     _op = Op::leaf;
    std::optional<Element> _leaf;
    std::vector<Expr>      _children;
  };

  // Exact evaluation; RingMismatch if any leaf belongs to another ring.
  Element evaluate(FiniteRing const& ring, Expr const& expression);

  // An additive subgroup of a FiniteRing stored by its Howell basis.
  class Subgroup {
   public:
    Subgroup(FiniteRing ring, std::vector<Vec> generators);

    FiniteRing const& ring() const noexcept {
      return _ring;
    }
    std::vector<Vec> const& basis() const noexcept {
      return _basis;
    }
    std::uint64_t order() const noexcept {
      return _order;
    }
    bool is_zero() const noexcept {
      return _basis.empty();
    }

    bool contains(Vec const& v) const;
    bool contains(Element const& x) const;
    // other is a subset of *this
    bool includes(Subgroup const& other) const;
    // Coefficients with respect to basis(), nullopt if v is not a member.
    std::optional<Vec> coordinates(Vec const& v) const;

    // All members in the canonical order of their basis expansions.
    std::vector<Vec> elements() const;

    // Flattened basis, usable as a map key.
    std::vector<Coord> key() const;

    friend bool operator==(Subgroup const& a, Subgroup const& b);

   private:
    FiniteRing       _ring;
    std::vector<Vec> _basis;
    std::uint64_t    _order;
  };

  // Canonical order used by every lattice: by order, then by basis.
  bool canonical_less(Subgroup const& a, Subgroup const& b);

  Subgroup span_subgroup(FiniteRing const& ring, std::span<Element const> gens);
  Subgroup zero_subgroup(FiniteRing const& ring);
  Subgroup whole_ring(FiniteRing const& ring);
  Subgroup subgroup_sum(Subgroup const& a, Subgroup const& b);
  Subgroup intersect(Subgroup const& a, Subgroup const& b);
  // Additive span of all products a * b (computed on basis pairs).
  Subgroup subgroup_product(Subgroup const& a, Subgroup const& b);

  struct OneSidedIdeal {
    Subgroup subgroup;
    Side     side;
    bool     closure_witnessed = false;
  };

  // Smallest subgroup containing `generators` that is closed under
  // multiplication by every vector in `actors` on the given side.
  Subgroup submodule_closure(FiniteRing const&       ring,
                             std::vector<Vec>        generators,
                             std::vector<Vec> const& actors,
                             Side                    side);

  OneSidedIdeal one_sided_ideal_closure(FiniteRing const&        ring,
                                        std::span<Element const> generators,
                                        Side                     side);

  // Inclusion order on a set of subgroups, canonically sorted.
  struct SubgroupPoset {
    std::vector<Subgroup>                 nodes;
    std::vector<std::vector<std::size_t>> covers;  // covers[i]: j covering i
    std::size_t                           height = 0;

    std::size_t size() const noexcept {
      return nodes.size();
    }
    std::optional<std::size_t> index_of(Subgroup const& s) const;
  };

  SubgroupPoset make_poset(std::vector<Subgroup> nodes);

  // All subgroups M of `ambient` with actors * M in M (left) or M * actors
  // in M (right): principal seeds from every member of `ambient`, then the
  // join closure.  Throws LatticeTooLarge past `cap` seeds or nodes.
  SubgroupPoset enumerate_submodules(Subgroup const&         ambient,
                                     std::vector<Vec> const& actors,
                                     Side                    side,
                                     std::size_t             cap);

  struct IdealLattice {
    FiniteRing                            ring;
    Side                                  side;
    std::vector<OneSidedIdeal>            ideals;
    std::vector<std::vector<std::size_t>> cover_relation;
    std::size_t                           height = 0;

    std::size_t size() const noexcept {
      return ideals.size();
    }
  };

  IdealLattice enumerate_one_sided_ideals(FiniteRing const& ring,
                                          Side              side,
                                          std::size_t cap = kDefaultLatticeCap);

  // A subring presented as a standalone FiniteRing together with the
  // coordinate maps into the ambient ring.
  struct CornerRing {
    FiniteRing ring;
    Subgroup   image;

    Element embed(Vec const& local) const;
    Vec     project(Element const& x) const;  // NotIdempotent never; RingMismatch
    Subgroup embed(Subgroup const& local) const;
  };

  // Presents a multiplicatively closed subgroup as a ring.  The subgroup
  // must be free over Z/m' for one m' dividing m (MixedTorsion otherwise).
  CornerRing subring(Subgroup const& closed);

  // eSe; throws NotIdempotent unless e * e = e.
  CornerRing corner_ring(FiniteRing const& ring, Element const& e);

  // Block diagonal product; throws ModulusMismatch.
  FiniteRing direct_product(std::span<FiniteRing const> rings);

  // Empty when S is the direct sum of `parts` (they span S and their orders
  // multiply to |S|), otherwise a description of the defect.
  std::string direct_sum_defect(FiniteRing const&            ring,
                                std::vector<Subgroup> const& parts);

  std::optional<Element> find_identity(FiniteRing const& ring);
  // Two-sided identity of the subring carried by a closed subgroup.
  std::optional<Vec> find_identity_in(Subgroup const& closed);

  // Inverse of a unit in a unital ring, nullopt if x is not invertible.
  std::optional<Element> inverse_of(Element const& x);

}  // namespace peirce

#endif  // PEIRCE_FINRING_HPP_
