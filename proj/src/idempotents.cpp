#include "peirce/idempotents.hpp"

#include <string>

namespace peirce {

  namespace {

    std::string idx(std::size_t i) {
      return std::to_string(i);
    }

    struct PeirceBlocks {
      PeirceTable const& t;

      std::size_t size() const {
        return t.size();
      }
      bool nonzero(std::size_t i, std::size_t j) const {
        return !t.at(i, j).is_zero();
      }
      Subgroup product(std::size_t i, std::size_t j, std::size_t l) const {
        return subgroup_product(t.at(i, j), t.at(j, l));
      }
      bool equals(Subgroup const& p, std::size_t i, std::size_t l) const {
        return p == t.at(i, l);
      }
      bool has_unit(Subgroup const& p, std::size_t i) const {
        return p.contains(t.set[i].coords());
      }
      std::vector<Vec> describe(Subgroup const& p) const {
        return p.basis();
      }
      std::string name(std::size_t i, std::size_t j) const {
        return "S(" + idx(i) + "," + idx(j) + ")";
      }
    };

  }  // namespace

  IdempotentAudit audit_complete_set(FiniteRing const&        ring,
                                     std::span<Element const> candidates) {
    for (auto const& e : candidates) {
      if (!ring.same_as(e.ring())) {
        throw Error(ErrorKind::RingMismatch,
                    "candidate idempotent is bound to another ring");
      }
    }
    IdempotentAudit      a;
    std::size_t const    k = candidates.size();
    std::optional<Error> zero, idem, orth, left, right;

    a.nonzero = true;
    for (std::size_t i = 0; i < k && a.nonzero; ++i) {
      if (candidates[i].is_zero()) {
        a.nonzero = false;
        zero.emplace(ErrorKind::ZeroIdempotent, "e" + idx(i) + " = 0");
      }
    }
    a.idempotent = true;
    for (std::size_t i = 0; i < k && a.idempotent; ++i) {
      if (!(candidates[i] * candidates[i] == candidates[i])) {
        a.idempotent = false;
        idem.emplace(ErrorKind::NotIdempotent,
                     "e" + idx(i) + " = " + format(candidates[i])
                         + " has e*e != e");
      }
    }
    a.orthogonal = true;
    for (std::size_t i = 0; i < k && a.orthogonal; ++i) {
      for (std::size_t j = 0; j < k && a.orthogonal; ++j) {
        if (i != j && !(candidates[i] * candidates[j]).is_zero()) {
          a.orthogonal = false;
          orth.emplace(ErrorKind::NotOrthogonal,
                       "e" + idx(i) + " e" + idx(j) + " = "
                           + format(candidates[i] * candidates[j]));
        }
      }
    }
    Subgroup              all = whole_ring(ring);
    std::vector<Subgroup> sl, sr;
    for (auto const& e : candidates) {
      Subgroup span_e(ring, {e.coords()});
      sl.push_back(subgroup_product(all, span_e));
      sr.push_back(subgroup_product(span_e, all));
    }
    auto dl = direct_sum_defect(ring, sl);
    auto dr = direct_sum_defect(ring, sr);
    a.left_complete  = dl.empty();
    a.right_complete = dr.empty();
    if (!dl.empty()) {
      left.emplace(ErrorKind::NotComplete, "left: S e_i, " + dl);
    }
    if (!dr.empty()) {
      right.emplace(ErrorKind::NotComplete, "right: e_i S, " + dr);
    }
    for (auto* f : {&zero, &idem, &orth, &left, &right}) {
      if (*f) {
        a.failure = std::move(*f);
        break;
      }
    }
    return a;
  }

  IdempotentSet validate_complete_set(FiniteRing const&        ring,
                                      std::span<Element const> candidates) {
    auto audit = audit_complete_set(ring, candidates);
    if (audit.failure) {
      throw *audit.failure;
    }
    return IdempotentSet(
        ring, {candidates.begin(), candidates.end()}, std::move(audit));
  }

  PeirceTable peirce_table(IdempotentSet const& set) {
    FiniteRing const& ring = set.ring();
    std::size_t const k    = set.size();
    Subgroup          all  = whole_ring(ring);
    PeirceTable       table{set, {}, {}};
    std::vector<Subgroup> left;  // e_i S
    for (auto const& e : set.elements()) {
      left.push_back(subgroup_product(Subgroup(ring, {e.coords()}), all));
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        table.components.push_back(
            subgroup_product(left[i], Subgroup(ring, {set[j].coords()})));
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      table.corners.push_back(corner_ring(ring, set[i]));
    }
    return table;
  }

  StrongnessReport strong_condition_report(PeirceTable const& table) {
    return detail::evaluate_strong(PeirceBlocks{table});
  }

  bool is_strong(PeirceTable const& table) {
    return detail::condition_three(PeirceBlocks{table}).holds;
  }

  bool is_strong(IdempotentSet const& set) {
    return is_strong(peirce_table(set));
  }

  LatticeCorrespondence corner_lattice_correspondence(PeirceTable const& table,
                                                      std::size_t        i,
                                                      std::size_t        j,
                                                      Side               side,
                                                      std::size_t        cap) {
    std::size_t const k = table.size();
    if (i >= k || j >= k) {
      throw Error(ErrorKind::ParameterOutOfRange,
                  "index pair (" + idx(i) + "," + idx(j) + ") outside I");
    }
    if (!is_strong(table)) {
      throw Error(ErrorKind::NotStrong,
                  "the complete set of idempotents is not strong");
    }
    if (table.at(i, j).is_zero()) {
      throw Error(ErrorKind::ZeroComponent, "S(" + idx(i) + "," + idx(j) + ") = 0");
    }
    FiniteRing const& ring  = table.set.ring();
    bool const        left  = side == Side::left;
    Subgroup          all   = whole_ring(ring);
    Subgroup          e_i(ring, {table.set[i].coords()});
    Subgroup          e_j(ring, {table.set[j].coords()});

    LatticeCorrespondence c;
    c.i    = i;
    c.j    = j;
    c.side = side;

    CornerRing const&     corner = table.corners[i];
    auto                  local  = enumerate_one_sided_ideals(corner.ring, side, cap);
    std::vector<Subgroup> embedded;
    for (auto const& ideal : local.ideals) {
      embedded.push_back(corner.embed(ideal.subgroup));
    }
    c.ideals = make_poset(std::move(embedded));

    Subgroup const& block = left ? table.at(j, i) : table.at(i, j);
    c.submodules = enumerate_submodules(block, table.at(j, j).basis(), side, cap);

    // e_j S and S e_j (resp. for i) as the fixed outer factors
    Subgroup outer_a = left ? subgroup_product(e_j, all) : subgroup_product(all, e_j);
    Subgroup outer_b = left ? subgroup_product(e_i, all) : subgroup_product(all, e_i);
    auto apply = [&](Subgroup const& outer, Subgroup const& x) {
      return left ? subgroup_product(outer, x) : subgroup_product(x, outer);
    };

    std::vector<Subgroup> alpha_img, beta_img;
    for (auto const& node : c.ideals.nodes) {
      alpha_img.push_back(apply(outer_a, node));
      c.alpha.push_back(c.submodules.index_of(alpha_img.back()));
    }
    for (auto const& node : c.submodules.nodes) {
      beta_img.push_back(apply(outer_b, node));
      c.beta.push_back(c.ideals.index_of(beta_img.back()));
    }

    c.mutually_inverse = true;
    for (std::size_t a = 0; a < c.alpha.size(); ++a) {
      c.mutually_inverse = c.mutually_inverse && c.alpha[a]
                        && c.beta[*c.alpha[a]] == a;
    }
    for (std::size_t b = 0; b < c.beta.size(); ++b) {
      c.mutually_inverse = c.mutually_inverse && c.beta[b]
                        && c.alpha[*c.beta[b]] == b;
    }

    auto monotone = [](SubgroupPoset const& from, std::vector<Subgroup> const& img) {
      for (std::size_t x = 0; x < from.size(); ++x) {
        for (std::size_t y = 0; y < from.size(); ++y) {
          if (from.nodes[y].includes(from.nodes[x]) && !img[y].includes(img[x])) {
            return false;
          }
        }
      }
      return true;
    };
    c.alpha_monotone = monotone(c.ideals, alpha_img);
    c.beta_monotone  = monotone(c.submodules, beta_img);
    c.sizes_equal    = c.ideals.size() == c.submodules.size();
    c.heights_equal  = c.ideals.height == c.submodules.height;
    return c;
  }

  LatticeStats lattice_stats(FiniteRing const& ring, std::size_t cap) {
    auto l = enumerate_one_sided_ideals(ring, Side::left, cap);
    auto r = enumerate_one_sided_ideals(ring, Side::right, cap);
    return {l.size(), l.height, r.size(), r.height};
  }

  ChainProfile chain_profile(IdempotentSet const& set, std::size_t cap) {
    auto         table = peirce_table(set);
    ChainProfile p;
    p.index_count = set.size();
    for (auto const& corner : table.corners) {
      p.corners.push_back(lattice_stats(corner.ring, cap));
    }
    p.whole  = lattice_stats(set.ring(), cap);
    p.strong = is_strong(table);
    p.peirce_direct_sum =
        direct_sum_defect(set.ring(), table.components).empty();

    FiniteRing const& ring     = set.ring();
    Subgroup          diagonal = zero_subgroup(ring);
    Element           unit     = ring.zero();
    for (std::size_t i = 0; i < set.size(); ++i) {
      diagonal = subgroup_sum(diagonal, table.at(i, i));
      unit     = unit + set[i];
    }
    auto found      = find_identity_in(diagonal);
    p.diagonal_unit = found && *found == unit.coords();
    p.consistent    = p.peirce_direct_sum && p.diagonal_unit;
    return p;
  }

}  // namespace peirce
