#include "peirce/graded.hpp"

#include "peirce/error.hpp"

namespace peirce {

  namespace {

    std::string idx(std::size_t i) {
      return std::to_string(i);
    }

    std::string morphism(SmallCategory const& c, std::size_t g) {
      return idx(g) + " (" + c.label(g) + ")";
    }

  }  // namespace

  Grading attach_grading(FiniteRing                   ring,
                         SmallCategory                category,
                         std::vector<Subgroup> const& components) {
    std::size_t const q = category.morphism_count();
    if (components.size() != q) {
      throw Error(ErrorKind::ShapeMismatch,
                  "expected one component per morphism (" + idx(q) + "), got "
                      + idx(components.size()));
    }
    for (auto const& c : components) {
      if (!c.ring().same_as(ring)) {
        throw Error(ErrorKind::RingMismatch, "component bound to another ring");
      }
    }
    auto defect = direct_sum_defect(ring, components);
    if (!defect.empty()) {
      throw Error(ErrorKind::NotDirectSum, defect);
    }
    for (std::size_t g = 0; g < q; ++g) {
      for (std::size_t h = 0; h < q; ++h) {
        bool defined = category.composable(g, h);
        for (auto const& x : components[g].basis()) {
          for (auto const& y : components[h].basis()) {
            Vec  xy = ring.multiply(x, y);
            bool ok = defined ? components[category.compose(g, h)].contains(xy)
                              : zmod::is_zero(xy);
            if (!ok) {
              throw Error(ErrorKind::GradingViolation,
                          "(" + idx(g) + "," + idx(h) + "): "
                              + format(ring.element(x)) + " * "
                              + format(ring.element(y)) + " = "
                              + format(ring.element(xy))
                              + (defined ? " lies outside S_gh" : " but g h is undefined"));
            }
          }
        }
      }
    }
    return Grading{std::move(ring), std::move(category), components};
  }

  Grading trivial_grading(FiniteRing ring) {
    Subgroup all = whole_ring(ring);
    return attach_grading(std::move(ring), trivial_category(), {all});
  }

  Subgroup object_component(Grading const& gr, std::size_t a) {
    return gr.at(gr.category.identity(a));
  }

  Subgroup hom_component(Grading const& gr, std::size_t a, std::size_t b) {
    Subgroup out = zero_subgroup(gr.ring);
    for (std::size_t g : gr.category.hom(a, b)) {
      out = subgroup_sum(out, gr.at(g));
    }
    return out;
  }

  ObjectUnitalCheck object_unital_check(Grading const& gr) {
    ObjectUnitalCheck  r;
    auto const&        cat  = gr.category;
    FiniteRing const&  ring = gr.ring;
    for (std::size_t a = 0; a < cat.object_count(); ++a) {
      Subgroup sa = object_component(gr, a);
      auto     u  = sa.is_zero() ? std::nullopt : find_identity_in(sa);
      if (!u) {
        r.witness = {a};
        r.reason  = "S_" + idx(a) + " is not unital";
        r.units.clear();
        return r;
      }
      r.units.push_back(*u);
    }
    for (std::size_t g = 0; g < cat.morphism_count(); ++g) {
      Vec const& left  = r.units[cat.cod(g)];
      Vec const& right = r.units[cat.dom(g)];
      for (auto const& s : gr.at(g).basis()) {
        if (ring.multiply(left, s) != s || ring.multiply(s, right) != s) {
          r.witness = {g};
          r.reason  = "local units do not act as identities on S_" + morphism(cat, g);
          r.units.clear();
          return r;
        }
      }
    }
    r.holds = true;
    return r;
  }

  Verdict strongly_graded_check(Grading const& gr) {
    auto const& cat = gr.category;
    for (std::size_t g = 0; g < cat.morphism_count(); ++g) {
      for (std::size_t h = 0; h < cat.morphism_count(); ++h) {
        if (!cat.composable(g, h)) {
          continue;
        }
        auto p = subgroup_product(gr.at(g), gr.at(h));
        if (!(p == gr.at(cat.compose(g, h)))) {
          return Verdict{false,
                         {g, h},
                         "S_g S_h is a proper subgroup of S_gh",
                         p.basis()};
        }
      }
    }
    return {};
  }

  namespace {

    struct GradedBlocks {
      Grading const&        gr;
      std::vector<Vec>      units;
      std::vector<Subgroup> blocks;  // S_G(a,b), row-major

      GradedBlocks(Grading const& g, std::vector<Vec> u) : gr(g), units(std::move(u)) {
        std::size_t p = gr.category.object_count();
        for (std::size_t a = 0; a < p; ++a) {
          for (std::size_t b = 0; b < p; ++b) {
            blocks.push_back(hom_component(gr, a, b));
          }
        }
      }

      Subgroup const& block(std::size_t a, std::size_t b) const {
        return blocks[a * size() + b];
      }
      std::size_t size() const {
        return gr.category.object_count();
      }
      bool nonzero(std::size_t a, std::size_t b) const {
        return !block(a, b).is_zero();
      }
      Subgroup product(std::size_t a, std::size_t b, std::size_t c) const {
        return subgroup_product(block(a, b), block(b, c));
      }
      bool equals(Subgroup const& p, std::size_t a, std::size_t c) const {
        return p == block(a, c);
      }
      bool has_unit(Subgroup const& p, std::size_t a) const {
        return p.contains(units[a]);
      }
      std::vector<Vec> describe(Subgroup const& p) const {
        return p.basis();
      }
      std::string name(std::size_t a, std::size_t b) const {
        return "S_G(" + idx(a) + "," + idx(b) + ")";
      }
    };

    std::vector<Vec> require_units(Grading const& gr) {
      auto ou = object_unital_check(gr);
      if (!ou.holds) {
        throw Error(ErrorKind::NotObjectUnital, ou.reason);
      }
      return ou.units;
    }

    Verdict eq1a_with(Grading const& gr, GradedBlocks const& blocks) {
      FiniteRing const& ring = gr.ring;
      Subgroup          all  = whole_ring(ring);
      std::size_t const p    = blocks.size();
      for (std::size_t a = 0; a < p; ++a) {
        Subgroup left = subgroup_product(Subgroup(ring, {blocks.units[a]}), all);
        for (std::size_t b = 0; b < p; ++b) {
          auto lhs = subgroup_product(left, Subgroup(ring, {blocks.units[b]}));
          if (!(lhs == blocks.block(a, b))) {
            return Verdict{false,
                           {a, b},
                           "1_a S 1_b differs from " + blocks.name(a, b),
                           lhs.basis()};
          }
        }
      }
      return {};
    }

  }  // namespace

  GradedStrongReport homset_strongly_graded_report(Grading const& gr) {
    auto units = require_units(gr);
    if (!is_homset_strong(gr.category)) {
      throw Error(ErrorKind::CategoryNotHomSetStrong,
                  "the grading category is not hom-set strong");
    }
    GradedBlocks       blocks(gr, std::move(units));
    GradedStrongReport r;
    r.conditions  = detail::evaluate_strong(blocks);
    auto eq       = eq1a_with(gr, blocks);
    r.eq1a        = eq.holds;
    r.eq1a_witness = eq.witness;
    return r;
  }

  Verdict eq1a_check(Grading const& gr) {
    GradedBlocks blocks(gr, require_units(gr));
    return eq1a_with(gr, blocks);
  }

  IdempotentSet induced_idempotents(Grading const& gr) {
    std::vector<Element> units;
    for (auto const& u : require_units(gr)) {
      units.push_back(gr.ring.element(u));
    }
    return validate_complete_set(gr.ring, units);
  }

  GradedFlags graded_flags(Grading const& gr) {
    GradedFlags f;
    auto        ou  = object_unital_check(gr);
    f.object_unital   = ou.holds;
    f.strongly_graded = strongly_graded_check(gr).holds;
    if (!ou.holds) {
      f.homset_strongly_graded = Verdict{false, ou.witness, "not object unital: " + ou.reason, {}};
      return f;
    }
    f.induced_set = induced_idempotents(gr);
    if (!is_homset_strong(gr.category)) {
      f.homset_strongly_graded =
          Verdict{false, {}, "the grading category is not hom-set strong", {}};
      return f;
    }
    f.homset_strongly_graded = detail::condition_three(GradedBlocks(gr, ou.units));
    return f;
  }

}  // namespace peirce
