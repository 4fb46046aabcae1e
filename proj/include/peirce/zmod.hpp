// peirce - finite workbench for rings with enough idempotents and
// category graded rings.
//
// Linear algebra over Z/m: residues, the Howell normal form of a row span,
// membership by reduction and solving x * A = b.
//
// The Howell form of a submodule of (Z/m)^w is a row echelon basis such that
//
//   * every pivot divides m (pivots are normalised by a unit),
//   * entries above a pivot p lie in [0, p),
//   * for every k the rows with pivot column >= k span all vectors of the
//     module whose first k entries vanish (the Howell property).
//
// Unlike plain echelon forms it is unique, so two modules are equal iff their
// Howell forms are identical, and greedy reduction against it decides
// membership.  Every element v of the module has a unique expansion
// v = sum c_i h_i with 0 <= c_i < m / pivot_i.

#ifndef PEIRCE_ZMOD_HPP_
#define PEIRCE_ZMOD_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace peirce {

  using Coord = std::int64_t;
  using Vec   = std::vector<Coord>;

  namespace zmod {

    inline Coord reduce(Coord x, Coord m) noexcept {
      x %= m;
      return x < 0 ? x + m : x;
    }

    Coord gcd(Coord a, Coord b) noexcept;

    // Returns a unit u of Z/m with u * a = gcd(a, m) (mod m).
    Coord normalizing_unit(Coord a, Coord m);

    // Multiplicative inverse of a unit, nullopt if a is not a unit.
    std::optional<Coord> inverse(Coord a, Coord m);

    void add_multiple(Vec& target, Vec const& source, Coord factor, Coord m);

    bool is_zero(Vec const& v) noexcept;

    // Index of the first nonzero entry, or v.size() for the zero vector.
    std::size_t leading_index(Vec const& v) noexcept;

    // Howell normal form of the row span of `rows` (each of length `width`),
    // zero rows dropped.
    std::vector<Vec> howell_form(std::vector<Vec> rows,
                                 std::size_t      width,
                                 Coord            m);

    // Reduces v against a Howell basis.  Returns true iff v lies in its span;
    // when `coefficients` is given it receives c with v = sum c_i h_i and
    // 0 <= c_i < m / pivot_i.
    bool reduce_against(std::vector<Vec> const& howell,
                        Vec                     v,
                        Coord                   m,
                        Vec*                    coefficients = nullptr);

    // Additive order of the span of a Howell basis.
    std::uint64_t span_order(std::vector<Vec> const& howell, Coord m);

    // Some x with x * A = b where A has rows `a`, or nullopt.
    std::optional<Vec> solve_left(std::vector<Vec> const& a,
                                  Vec const&              b,
                                  Coord                   m);

    // Howell form of the intersection of two row spans of equal width.
    std::vector<Vec> intersect(std::vector<Vec> const& a,
                               std::vector<Vec> const& b,
                               std::size_t             width,
                               Coord                   m);

  }  // namespace zmod
}  // namespace peirce

#endif  // PEIRCE_ZMOD_HPP_
