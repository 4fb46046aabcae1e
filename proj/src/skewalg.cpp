#include "peirce/skewalg.hpp"

#include "peirce/error.hpp"

namespace peirce {

  namespace {

    std::string idx(std::size_t i) {
      return std::to_string(i);
    }

    std::string vec(Vec const& v) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
      }
      return s + "]";
    }

  }  // namespace

  RingMap identity_map(std::size_t rank) {
    RingMap a(rank * rank, 0);
    for (std::size_t i = 0; i < rank; ++i) {
      a[i * rank + i] = 1;
    }
    return a;
  }

  Vec apply_map(RingMap const& map, Vec const& x, std::size_t cod_rank, Coord m) {
    Vec out(cod_rank, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) {
        continue;
      }
      for (std::size_t k = 0; k < cod_rank; ++k) {
        out[k] = zmod::reduce(out[k] + zmod::reduce(x[i] * map[i * cod_rank + k], m), m);
      }
    }
    return out;
  }

  RingMap compose_maps(RingMap const& second,
                       RingMap const& first,
                       std::size_t    dom_rank,
                       std::size_t    mid_rank,
                       std::size_t    cod_rank,
                       Coord          m) {
    RingMap out;
    out.reserve(dom_rank * cod_rank);
    for (std::size_t i = 0; i < dom_rank; ++i) {
      Vec row(first.begin() + static_cast<std::ptrdiff_t>(i * mid_rank),
              first.begin() + static_cast<std::ptrdiff_t>((i + 1) * mid_rank));
      auto img = apply_map(second, row, cod_rank, m);
      out.insert(out.end(), img.begin(), img.end());
    }
    return out;
  }

  std::string ring_iso_defect(FiniteRing const& from, FiniteRing const& to, RingMap const& map) {
    std::size_t const n = from.rank(), r = to.rank();
    Coord const       m = to.modulus();
    if (from.modulus() != m) {
      return "moduli differ";
    }
    if (map.size() != n * r) {
      return "matrix is not " + idx(n) + "x" + idx(r);
    }
    for (Coord c : map) {
      if (c < 0 || c >= m) {
        return "entry " + std::to_string(c) + " outside Z/" + std::to_string(m);
      }
    }
    if (n != r) {
      return "ranks differ (" + idx(n) + " vs " + idx(r) + ")";
    }
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) {
      rows.push_back(apply_map(map, from.basis_vector(i), r, m));
    }
    if (Subgroup(to, rows).order() != to.order()) {
      return "not bijective";
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto lhs = apply_map(map, from.multiply(from.basis_vector(i), from.basis_vector(j)), r, m);
        auto rhs = to.multiply(rows[i], rows[j]);
        if (lhs != rhs) {
          return "not multiplicative on (b" + idx(i) + ", b" + idx(j) + "): " + vec(lhs)
                 + " vs " + vec(rhs);
        }
      }
    }
    auto one_from = find_identity(from);
    auto one_to   = find_identity(to);
    if (!one_from || !one_to) {
      return "rings are not unital";
    }
    if (apply_map(map, one_from->coords(), r, m) != one_to->coords()) {
      return "does not preserve the identity";
    }
    return {};
  }

  Vec SkewCategorySystem::apply(std::size_t g, Vec const& x) const {
    auto const& target = object_rings.at(category.cod(g));
    return apply_map(maps.at(g), x, target.rank(), target.modulus());
  }

  SkewCategorySystem validate_system(SmallCategory           category,
                                     std::vector<FiniteRing> object_rings,
                                     std::vector<RingMap>    maps) {
    std::size_t const p = category.object_count();
    std::size_t const q = category.morphism_count();
    if (object_rings.size() != p) {
      throw Error(ErrorKind::ShapeMismatch,
                  "expected " + idx(p) + " object rings, got " + idx(object_rings.size()));
    }
    if (maps.size() != q) {
      throw Error(ErrorKind::ShapeMismatch,
                  "expected " + idx(q) + " maps, got " + idx(maps.size()));
    }
    for (std::size_t g = 0; g < q; ++g) {
      std::size_t want = object_rings[category.dom(g)].rank() * object_rings[category.cod(g)].rank();
      if (maps[g].size() != want) {
        throw Error(ErrorKind::ShapeMismatch,
                    "map " + idx(g) + " has " + idx(maps[g].size()) + " entries, expected "
                        + idx(want));
      }
    }
    Coord const m = object_rings.empty() ? 0 : object_rings[0].modulus();
    for (std::size_t a = 0; a < p; ++a) {
      if (object_rings[a].modulus() != m) {
        throw Error(ErrorKind::ModulusMismatch,
                    "ring at object " + idx(a) + " is over Z/"
                        + std::to_string(object_rings[a].modulus()) + ", not Z/"
                        + std::to_string(m));
      }
    }
    for (std::size_t a = 0; a < p; ++a) {
      if (!find_identity(object_rings[a])) {
        throw Error(ErrorKind::NotUnital, "ring at object " + idx(a) + " has no identity");
      }
    }
    for (std::size_t g = 0; g < q; ++g) {
      auto defect =
          ring_iso_defect(object_rings[category.dom(g)], object_rings[category.cod(g)], maps[g]);
      if (!defect.empty()) {
        throw Error(ErrorKind::NotRingIso,
                    "map of morphism " + idx(g) + " (" + category.label(g) + "): " + defect);
      }
    }
    for (std::size_t a = 0; a < p; ++a) {
      if (maps[category.identity(a)] != identity_map(object_rings[a].rank())) {
        throw Error(ErrorKind::IdentityNotIdentity,
                    "map of the identity at object " + idx(a) + " is not the identity");
      }
    }
    for (std::size_t g = 0; g < q; ++g) {
      for (std::size_t h = 0; h < q; ++h) {
        if (!category.composable(g, h)) {
          continue;
        }
        std::size_t gh   = category.compose(g, h);
        auto        both = compose_maps(maps[g], maps[h], object_rings[category.dom(h)].rank(),
                                        object_rings[category.cod(h)].rank(),
                                        object_rings[category.cod(g)].rank(), m);
        if (both != maps[gh]) {
          throw Error(ErrorKind::NotFunctorial,
                      "(" + idx(g) + "," + idx(h) + "): alpha_g alpha_h differs from alpha_"
                          + idx(gh));
        }
      }
    }
    return SkewCategorySystem{std::move(category), std::move(object_rings), std::move(maps)};
  }

  SkewCategorySystem constant_system(FiniteRing const& ring, SmallCategory const& category) {
    std::vector<FiniteRing> rings(category.object_count(), ring);
    std::vector<RingMap>    maps(category.morphism_count(), identity_map(ring.rank()));
    return validate_system(category, std::move(rings), std::move(maps));
  }

  SkewAlgebra build_skew_algebra(SkewCategorySystem const& system) {
    auto const&       cat = system.category;
    std::size_t const q   = cat.morphism_count();
    Coord const       m   = system.ring_at(0).modulus();

    std::vector<std::size_t> offsets;
    std::size_t              n = 0;
    for (std::size_t g = 0; g < q; ++g) {
      offsets.push_back(n);
      n += system.ring_at(cat.cod(g)).rank();
    }

    RingSpec spec;
    spec.modulus = m;
    spec.rank    = n;
    spec.constants.assign(n * n * n, 0);
    for (std::size_t g = 0; g < q; ++g) {
      auto const& rg = system.ring_at(cat.cod(g));
      for (std::size_t k = 0; k < rg.rank(); ++k) {
        spec.labels.push_back(rg.labels()[k] + "*" + cat.label(g));
      }
    }
    for (std::size_t g = 0; g < q; ++g) {
      auto const& rg = system.ring_at(cat.cod(g));
      for (std::size_t h = 0; h < q; ++h) {
        if (!cat.composable(g, h)) {
          continue;
        }
        std::size_t gh = cat.compose(g, h);
        auto const& rh = system.ring_at(cat.cod(h));
        for (std::size_t l = 0; l < rh.rank(); ++l) {
          Vec moved = system.apply(g, rh.basis_vector(l));
          for (std::size_t k = 0; k < rg.rank(); ++k) {
            Vec         c = rg.multiply(rg.basis_vector(k), moved);
            std::size_t i = offsets[g] + k, j = offsets[h] + l;
            for (std::size_t t = 0; t < c.size(); ++t) {
              spec.constants[(i * n + j) * n + offsets[gh] + t] = c[t];
            }
          }
        }
      }
    }

    FiniteRing            ring = make_ring(std::move(spec));
    std::vector<Subgroup> components;
    for (std::size_t g = 0; g < q; ++g) {
      std::vector<Vec> rows;
      for (std::size_t k = 0; k < system.ring_at(cat.cod(g)).rank(); ++k) {
        rows.push_back(ring.basis_vector(offsets[g] + k));
      }
      components.emplace_back(ring, std::move(rows));
    }

    std::vector<Vec> units;
    for (std::size_t a = 0; a < cat.object_count(); ++a) {
      Vec  u(n, 0);
      auto one = find_identity(system.ring_at(a))->coords();
      for (std::size_t k = 0; k < one.size(); ++k) {
        u[offsets[cat.identity(a)] + k] = one[k];
      }
      units.push_back(std::move(u));
    }

    SkewAlgebra out{ring, attach_grading(ring, cat, components), system, offsets, units};
    out.strongly_graded = strongly_graded_check(out.grading).holds;
    auto ou             = object_unital_check(out.grading);
    out.object_unital   = ou.holds && ou.units == units;
    return out;
  }

  SkewAlgebra build_category_algebra(FiniteRing const& ring, SmallCategory const& category) {
    return build_skew_algebra(constant_system(ring, category));
  }

  StrongEquivalenceCheck strong_idempotent_equivalence_check(SkewAlgebra const& algebra) {
    StrongEquivalenceCheck r;
    std::vector<Element>   units;
    for (auto const& u : algebra.local_units) {
      units.push_back(algebra.ring.element(u));
    }
    IdempotentSet set        = validate_complete_set(algebra.ring, units);
    r.idempotents_strong     = is_strong(set);
    r.category_homset_strong = is_homset_strong(algebra.grading.category);
    r.agree                  = r.idempotents_strong == r.category_homset_strong;

    auto ou       = object_unital_check(algebra.grading);
    r.units_match = ou.holds && ou.units == algebra.local_units;
    if (r.idempotents_strong && r.category_homset_strong) {
      r.graded        = homset_strongly_graded_report(algebra.grading);
      r.graded_passes = r.graded->conditions.condition3.holds && r.graded->conditions.agree
                        && r.graded->eq1a;
    }
    return r;
  }

  SkewAlgebra local_skew_algebra(SkewAlgebra const& algebra, std::size_t a) {
    auto const& sys   = algebra.system;
    auto const& elems = sys.category.hom(a, a);
    auto        local = build_MX(endomorphism_monoid(sys.category, a), 1);
    std::vector<RingMap> maps;
    for (auto g : elems) {
      maps.push_back(sys.maps[g]);
    }
    return build_skew_algebra(validate_system(local, {sys.ring_at(a)}, std::move(maps)));
  }

  namespace {

    // Local basis (b_k, position of g in G(a)) against (b_k, g) in S.
    bool local_matches(SkewAlgebra const& algebra, SkewAlgebra const& local, std::size_t a) {
      auto const&       elems = algebra.system.category.hom(a, a);
      std::size_t const r     = algebra.system.ring_at(a).rank();
      std::vector<std::size_t> to_global;
      for (auto g : elems) {
        for (std::size_t k = 0; k < r; ++k) {
          to_global.push_back(algebra.index(g, k));
        }
      }
      std::size_t const n = to_global.size();
      if (local.ring.rank() != n) {
        return false;
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Vec lhs = local.ring.multiply(local.ring.basis_vector(i), local.ring.basis_vector(j));
          Vec rhs = algebra.ring.multiply(algebra.ring.basis_vector(to_global[i]),
                                          algebra.ring.basis_vector(to_global[j]));
          Vec mapped(algebra.ring.rank(), 0);
          for (std::size_t t = 0; t < n; ++t) {
            mapped[to_global[t]] = lhs[t];
          }
          if (mapped != rhs) {
            return false;
          }
        }
      }
      return true;
    }

  }  // namespace

  ArtinianReport artinian_criteria_report(SkewAlgebra const& algebra, std::size_t cap) {
    ArtinianReport r;
    auto const&    cat = algebra.grading.category;
    r.objects          = cat.object_count();
    r.morphisms        = cat.morphism_count();
    r.homset_strong    = is_homset_strong(cat);
    bool ok            = true;
    for (std::size_t a = 0; a < r.objects; ++a) {
      LocalCorner c;
      c.object        = a;
      c.endomorphisms = cat.hom(a, a).size();
      auto corner     = corner_ring(algebra.ring, algebra.ring.element(algebra.local_units[a]));
      c.eq1a          = corner.image == hom_component(algebra.grading, a, a);
      c.local_matches = local_matches(algebra, local_skew_algebra(algebra, a), a);
      c.lattice       = lattice_stats(corner.ring, cap);
      ok              = ok && c.eq1a && c.local_matches;
      r.corners.push_back(c);
    }
    r.whole      = lattice_stats(algebra.ring, cap);
    r.consistent = ok;
    return r;
  }

}  // namespace peirce
