// Shared evaluator for the three "strong" conditions on a square family of
// blocks B(i, j) indexed by a finite set {0, ..., k-1}.  The same shape of
// statement appears for Peirce components of a ring, hom-sets of a category
// and the hom-set components of a graded ring:
//
//   (1) for all (i, j, l): if two of B(i,j), B(j,l), B(i,l) are nonzero then
//       the third is nonzero and B(i,j) B(j,l) = B(i,l);
//   (2) for all (p, q): if one of B(p,q), B(q,p) is nonzero then so is the
//       other and B(p,q) B(q,p) = B(p,p);
//   (3) as (2) with "unit_p lies in B(p,q) B(q,p)" in place of equality.
//
// Each condition is evaluated on its own; the first failure in
// lexicographic order is kept as the witness.

#ifndef PEIRCE_DETAIL_STRONG_HPP_
#define PEIRCE_DETAIL_STRONG_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "peirce/zmod.hpp"

namespace peirce {

  struct Verdict {
    bool                     holds = true;
    std::vector<std::size_t> witness;  // failing triple or pair
    std::string              reason;
    std::vector<Vec>         product;  // the offending product, if computed
  };

  struct TriReport {
    Verdict condition1, condition2, condition3;
    bool    agree = true;
  };

  namespace detail {

    // Blocks must provide
    //   std::size_t size() const;
    //   bool nonzero(i, j) const;
    //   P product(i, j, l) const;           B(i,j) B(j,l)
    //   bool equals(P const&, i, l) const;  P == B(i,l)
    //   bool has_unit(P const&, p) const;   unit_p in P
    //   std::vector<Vec> describe(P const&) const;
    //   std::string name(i, j) const;
    template <class Blocks>
    Verdict condition_one(Blocks const& b) {
      std::size_t const k = b.size();
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          for (std::size_t l = 0; l < k; ++l) {
            bool ij = b.nonzero(i, j), jl = b.nonzero(j, l), il = b.nonzero(i, l);
            int  nz = int(ij) + int(jl) + int(il);
            if (nz < 2) {
              continue;
            }
            Verdict v{false, {i, j, l}, {}, {}};
            if (nz == 2) {
              std::string zero = !ij ? b.name(i, j) : !jl ? b.name(j, l) : b.name(i, l);
              v.reason = zero + " is zero while the other two are nonzero";
              return v;
            }
            auto p = b.product(i, j, l);
            if (!b.equals(p, i, l)) {
              v.reason  = b.name(i, j) + " " + b.name(j, l) + " differs from "
                        + b.name(i, l);
              v.product = b.describe(p);
              return v;
            }
          }
        }
      }
      return {};
    }

    template <class Blocks, class Check>
    Verdict pair_condition(Blocks const& b, Check const& check, char const* what) {
      std::size_t const k = b.size();
      for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t q = 0; q < k; ++q) {
          bool pq = b.nonzero(p, q), qp = b.nonzero(q, p);
          if (!pq && !qp) {
            continue;
          }
          Verdict v{false, {p, q}, {}, {}};
          if (!pq || !qp) {
            v.reason = (pq ? b.name(q, p) : b.name(p, q)) + " is zero but "
                     + (pq ? b.name(p, q) : b.name(q, p)) + " is not";
            return v;
          }
          auto prod = b.product(p, q, p);
          if (!check(prod, p)) {
            v.reason  = b.name(p, q) + " " + b.name(q, p) + " " + what;
            v.product = b.describe(prod);
            return v;
          }
        }
      }
      return {};
    }

    template <class Blocks>
    Verdict condition_two(Blocks const& b) {
      return pair_condition(
          b, [&](auto const& prod, std::size_t p) { return b.equals(prod, p, p); },
          "is not the diagonal block");
    }

    template <class Blocks>
    Verdict condition_three(Blocks const& b) {
      return pair_condition(
          b, [&](auto const& prod, std::size_t p) { return b.has_unit(prod, p); },
          "misses the local unit");
    }

    template <class Blocks>
    TriReport evaluate_strong(Blocks const& b) {
      TriReport r{condition_one(b), condition_two(b), condition_three(b), true};
      r.agree = r.condition1.holds == r.condition2.holds
             && r.condition2.holds == r.condition3.holds;
      return r;
    }

  }  // namespace detail

}  // namespace peirce

#endif  // PEIRCE_DETAIL_STRONG_HPP_
