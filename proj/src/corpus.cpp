#include "peirce/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>

#include "peirce/idempotents.hpp"

namespace peirce::corpus {

  namespace {

    std::string idx(std::size_t i) {
      return std::to_string(i);
    }

    [[noreturn]] void out_of_range(std::string const& what) {
      throw Error(ErrorKind::ParameterOutOfRange, what);
    }

    class Rng {
     public:
      explicit Rng(std::uint64_t seed) : _engine(seed) {}

      std::size_t below(std::size_t n) {
        return static_cast<std::size_t>(_engine() % n);
      }
      std::size_t between(std::size_t lo, std::size_t hi) {
        return lo + below(hi - lo + 1);
      }
      bool chance(std::size_t num, std::size_t den) {
        return below(den) < num;
      }

     private:
      std::mt19937_64 _engine;
    };

    // m^e, saturating just above `cap`.
    std::uint64_t power(std::uint64_t m, std::size_t e, std::uint64_t cap) {
      std::uint64_t r = 1;
      for (std::size_t i = 0; i < e; ++i) {
        if (r > cap / m + 1) {
          return cap + 1;
        }
        r *= m;
      }
      return r;
    }

    // Largest e with m^e <= cap.
    std::size_t log_floor(std::uint64_t m, std::uint64_t cap) {
      std::size_t e = 0;
      while (power(m, e + 1, cap) <= cap) {
        ++e;
      }
      return e;
    }

    ////////////////////////////////////////////////////////////////////////
    // Monoids, groups and categories
    ////////////////////////////////////////////////////////////////////////

    using Map = std::vector<std::size_t>;

    Map compose_map(Map const& f, Map const& g) {  // f after g
      Map out(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) {
        out[i] = f[g[i]];
      }
      return out;
    }

    // Submonoid of the maps on `points` generated by `gens`, identity first,
    // then in breadth-first order of discovery.  Empty if larger than `cap`.
    std::vector<Map> close_maps(std::size_t points, std::vector<Map> const& gens, std::size_t cap) {
      Map id(points);
      for (std::size_t i = 0; i < points; ++i) {
        id[i] = i;
      }
      std::vector<Map>           elems{id};
      std::map<Map, std::size_t> seen{{id, 0}};
      for (std::size_t k = 0; k < elems.size(); ++k) {
        for (auto const& g : gens) {
          Map y = compose_map(elems[k], g);
          if (!seen.count(y)) {
            if (elems.size() == cap) {
              return {};
            }
            seen.emplace(y, elems.size());
            elems.push_back(y);
          }
        }
      }
      return elems;
    }

    Monoid monoid_of_maps(std::vector<Map> const& elems, std::string name) {
      std::map<Map, std::size_t> where;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        where[elems[i]] = i;
      }
      std::size_t k = elems.size();
      Monoid      m{std::move(name), k, 0, std::vector<std::size_t>(k * k)};
      for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t y = 0; y < k; ++y) {
          m.table[x * k + y] = where.at(compose_map(elems[x], elems[y]));
        }
      }
      return m;
    }

    Map random_map(Rng& rng, std::size_t from, std::size_t to) {
      Map f(from);
      for (auto& v : f) {
        v = rng.below(to);
      }
      return f;
    }

    Map random_permutation(Rng& rng, std::size_t n) {
      Map p(n);
      for (std::size_t i = 0; i < n; ++i) {
        p[i] = i;
      }
      for (std::size_t i = n; i > 1; --i) {
        std::swap(p[i - 1], p[rng.below(i)]);
      }
      return p;
    }

    Monoid random_transformation_monoid(Rng& rng, std::size_t max_size) {
      for (int attempt = 0; attempt < 64; ++attempt) {
        std::size_t      points = rng.between(2, 3);
        std::vector<Map> gens;
        for (std::size_t g = rng.between(1, 2); g > 0; --g) {
          gens.push_back(random_map(rng, points, points));
        }
        auto elems = close_maps(points, gens, max_size);
        if (!elems.empty()) {
          return monoid_of_maps(elems, "T(" + idx(points) + ")");
        }
      }
      return named_monoid("C1");
    }

    struct PermGroup {
      std::size_t      points = 1;
      std::vector<Map> elems;  // identity first
    };

    PermGroup random_perm_group(Rng& rng, std::size_t points, std::size_t max_size) {
      for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Map> gens;
        for (std::size_t g = rng.between(1, 2); g > 0; --g) {
          gens.push_back(random_permutation(rng, points));
        }
        auto elems = close_maps(points, gens, max_size);
        if (!elems.empty()) {
          return {points, elems};
        }
      }
      return {points, close_maps(points, {}, 1)};
    }

    std::vector<std::string> const& group_names() {
      static std::vector<std::string> const names{"C1", "C2", "C3", "C4", "V4", "S3"};
      return names;
    }

    Monoid random_group(Rng& rng, std::size_t max_size) {
      std::vector<std::string> fit;
      for (auto const& n : group_names()) {
        if (named_monoid(n).size <= max_size) {
          fit.push_back(n);
        }
      }
      if (rng.chance(1, 3)) {
        auto g = random_perm_group(rng, rng.between(2, 4), max_size);
        return monoid_of_maps(g.elems, "P" + idx(g.elems.size()));
      }
      return named_monoid(fit[rng.below(fit.size())]);
    }

    Monoid random_monoid(Rng& rng, std::size_t max_size) {
      auto names = monoid_names();
      if (rng.chance(1, 2)) {
        return random_transformation_monoid(rng, max_size);
      }
      std::vector<std::string> fit;
      for (auto const& n : names) {
        if (named_monoid(n).size <= max_size) {
          fit.push_back(n);
        }
      }
      return named_monoid(fit[rng.below(fit.size())]);
    }

    // Reflexive transitive closure of a random relation; one morphism b -> a
    // for each related pair, composed in the only possible way.
    SmallCategory random_preorder(Rng& rng, std::size_t objects) {
      std::vector<std::vector<bool>> rel(objects, std::vector<bool>(objects, false));
      for (std::size_t a = 0; a < objects; ++a) {
        for (std::size_t b = 0; b < objects; ++b) {
          rel[a][b] = a == b || rng.chance(1, 3);
        }
      }
      for (std::size_t k = 0; k < objects; ++k) {
        for (std::size_t a = 0; a < objects; ++a) {
          for (std::size_t b = 0; b < objects; ++b) {
            rel[a][b] = rel[a][b] || (rel[a][k] && rel[k][b]);
          }
        }
      }
      CategorySpec                          spec;
      spec.objects = objects;
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> where;
      for (std::size_t a = 0; a < objects; ++a) {
        for (std::size_t b = 0; b < objects; ++b) {
          if (rel[a][b]) {
            where[{a, b}] = spec.dom.size();
            spec.cod.push_back(a);
            spec.dom.push_back(b);
            spec.labels.push_back(idx(b) + "<=" + idx(a));
          }
        }
      }
      std::size_t q = spec.dom.size();
      spec.compose.assign(q * q, kUndefined);
      for (std::size_t a = 0; a < objects; ++a) {
        spec.identity.push_back(where.at({a, a}));
      }
      for (auto const& [ab, g] : where) {
        for (auto const& [bc, h] : where) {
          if (ab.second == bc.first) {
            spec.compose[g * q + h] = where.at({ab.first, bc.second});
          }
        }
      }
      return make_category(std::move(spec));
    }

    // Objects are small sets; morphisms are the maps generated by a few
    // random ones.  Empty optional if the closure exceeds max_q.
    std::optional<SmallCategory> random_transformation_category(Rng&        rng,
                                                                 std::size_t objects,
                                                                 std::size_t max_q) {
      std::vector<std::size_t> sizes(objects);
      for (auto& s : sizes) {
        s = rng.between(1, 2);
      }
      struct Arrow {
        std::size_t dom, cod;
        Map         f;
        bool operator<(Arrow const& o) const {
          return std::tie(dom, cod, f) < std::tie(o.dom, o.cod, o.f);
        }
      };
      std::vector<Arrow>           arrows;
      std::map<Arrow, std::size_t> seen;
      auto add = [&](Arrow a) {
        if (seen.count(a)) {
          return true;
        }
        if (arrows.size() == max_q) {
          return false;
        }
        seen.emplace(a, arrows.size());
        arrows.push_back(std::move(a));
        return true;
      };
      for (std::size_t a = 0; a < objects; ++a) {
        if (!add({a, a, close_maps(sizes[a], {}, 1)[0]})) {
          return std::nullopt;
        }
      }
      for (std::size_t g = rng.between(1, 3); g > 0; --g) {
        std::size_t d = rng.below(objects), c = rng.below(objects);
        if (!add({d, c, random_map(rng, sizes[d], sizes[c])})) {
          return std::nullopt;
        }
      }
      for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t i = 0; i < arrows.size(); ++i) {
          for (std::size_t j = 0; j < arrows.size(); ++j) {
            if (arrows[i].dom != arrows[j].cod) {
              continue;
            }
            Arrow       c{arrows[j].dom, arrows[i].cod, compose_map(arrows[i].f, arrows[j].f)};
            std::size_t before = arrows.size();
            if (!add(c)) {
              return std::nullopt;
            }
            grew = grew || arrows.size() != before;
          }
        }
      }
      CategorySpec spec;
      spec.objects  = objects;
      std::size_t q = arrows.size();
      for (auto const& a : arrows) {
        spec.dom.push_back(a.dom);
        spec.cod.push_back(a.cod);
        std::string label = idx(a.dom) + ">" + idx(a.cod) + ":";
        for (auto v : a.f) {
          label += idx(v);
        }
        spec.labels.push_back(label);
      }
      for (std::size_t a = 0; a < objects; ++a) {
        spec.identity.push_back(a);
      }
      spec.compose.assign(q * q, kUndefined);
      for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
          if (arrows[i].dom == arrows[j].cod) {
            spec.compose[i * q + j] =
                seen.at({arrows[j].dom, arrows[i].cod, compose_map(arrows[i].f, arrows[j].f)});
          }
        }
      }
      return make_category(std::move(spec));
    }

    // Objects are the points; (g, x) : x -> g(x).
    SmallCategory action_groupoid(PermGroup const& g) {
      std::size_t const k = g.elems.size(), n = g.points;
      CategorySpec      spec;
      spec.objects = n;
      std::map<Map, std::size_t> where;
      for (std::size_t i = 0; i < k; ++i) {
        where[g.elems[i]] = i;
      }
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t x = 0; x < n; ++x) {
          spec.dom.push_back(x);
          spec.cod.push_back(g.elems[i][x]);
          spec.labels.push_back("(" + idx(i) + "," + idx(x) + ")");
        }
      }
      for (std::size_t x = 0; x < n; ++x) {
        spec.identity.push_back(x);  // identity element is first
      }
      std::size_t q = k * n;
      spec.compose.assign(q * q, kUndefined);
      for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = 0; b < q; ++b) {
          if (spec.dom[a] == spec.cod[b]) {
            std::size_t ab = where.at(compose_map(g.elems[a / n], g.elems[b / n]));
            spec.compose[a * q + b] = ab * n + spec.dom[b];
          }
        }
      }
      return make_category(std::move(spec));
    }

    SmallCategory discrete_category(std::size_t objects) {
      std::vector<SmallCategory> parts(objects, trivial_category());
      return disjoint_union(parts);
    }

    std::optional<SmallCategory> groupoid_component(Rng& rng, std::size_t max_objects,
                                                    std::size_t max_q) {
      if (rng.chance(1, 2)) {
        std::size_t s = rng.between(1, max_objects);
        if (s * s > max_q) {
          return std::nullopt;
        }
        return build_MX(random_group(rng, max_q / (s * s)), s);
      }
      std::size_t points = rng.between(1, std::min<std::size_t>(max_objects, 4));
      auto        g      = random_perm_group(rng, points, std::max<std::size_t>(1, max_q / points));
      if (g.elems.size() * points > max_q) {
        return std::nullopt;
      }
      return action_groupoid(g);
    }

    SmallCategory random_groupoid(Rng& rng, std::size_t max_objects, std::size_t max_q) {
      for (int attempt = 0; attempt < 200; ++attempt) {
        std::size_t parts = (max_objects >= 2 && rng.chance(1, 3)) ? 2 : 1;
        std::vector<SmallCategory> pieces;
        std::size_t                objects = 0, q = 0;
        for (std::size_t i = 0; i < parts; ++i) {
          auto c = groupoid_component(rng, max_objects, max_q);
          if (!c) {
            break;
          }
          objects += c->object_count();
          q += c->morphism_count();
          pieces.push_back(std::move(*c));
        }
        if (pieces.size() == parts && objects <= max_objects && q <= max_q) {
          return parts == 1 ? pieces[0] : disjoint_union(pieces);
        }
      }
      return discrete_category(std::min(max_objects, max_q));
    }

    std::optional<SmallCategory> category_flavor(Rng& rng, int flavor, std::size_t max_objects,
                                                 std::size_t max_q) {
      std::size_t objects = rng.between(1, max_objects);
      switch (flavor) {
        case 0:
          return random_transformation_category(rng, objects, max_q);
        case 1:
          return random_preorder(rng, objects);
        case 2: {
          std::size_t s = rng.between(1, std::min<std::size_t>(objects, 3));
          if (s * s > max_q) {
            return std::nullopt;
          }
          return build_MX(random_monoid(rng, max_q / (s * s)), s);
        }
        case 3: {
          if (max_objects < 2) {
            return std::nullopt;
          }
          auto a = category_flavor(rng, static_cast<int>(rng.below(3)), max_objects - 1, max_q);
          if (!a || a->object_count() >= max_objects) {
            return std::nullopt;
          }
          auto b = category_flavor(rng, static_cast<int>(rng.below(3)),
                                   max_objects - a->object_count(), max_q);
          if (!b) {
            return std::nullopt;
          }
          return disjoint_union({*a, *b});
        }
        case 4: {
          auto a = category_flavor(rng, static_cast<int>(rng.below(3)), max_objects, max_q);
          if (!a) {
            return std::nullopt;
          }
          return opposite(*a);
        }
        default:
          return random_groupoid(rng, max_objects, max_q);
      }
    }

    SmallCategory random_category(Rng& rng, std::size_t max_objects, std::size_t max_q, int flavor) {
      for (int attempt = 0; attempt < 200; ++attempt) {
        int  f = flavor < 0 ? static_cast<int>(rng.below(6)) : flavor;
        auto c = category_flavor(rng, f, max_objects, max_q);
        if (c && c->object_count() <= max_objects && c->morphism_count() <= max_q) {
          return *c;
        }
      }
      return discrete_category(std::max<std::size_t>(1, std::min(max_objects, max_q)));
    }

    ////////////////////////////////////////////////////////////////////////
    // Rings
    ////////////////////////////////////////////////////////////////////////

    FiniteRing diagonal_ring(Coord m, std::size_t r) {
      std::vector<Coord> c(r * r * r, 0);
      for (std::size_t i = 0; i < r; ++i) {
        c[(i * r + i) * r + i] = 1;
      }
      return make_ring(m, r, std::move(c));
    }

    RingMap permutation_map(Map const& image) {
      std::size_t k = image.size();
      RingMap     a(k * k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        a[i * k + image[i]] = 1;
      }
      return a;
    }

    FiniteRing matrix_ring(Coord m, std::size_t n) {
      std::size_t const  r = n * n;
      std::vector<Coord> c(r * r * r, 0);
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          labels.push_back("E" + idx(i + 1) + idx(j + 1));
          for (std::size_t l = 0; l < n; ++l) {
            c[((i * n + j) * r + j * n + l) * r + i * n + l] = 1;
          }
        }
      }
      return make_ring(m, r, std::move(c), std::move(labels));
    }

    struct Piece {
      FiniteRing                 ring;
      std::vector<Vec>           idempotents;
      std::optional<SkewAlgebra> algebra;
    };

    Piece from_algebra(SkewAlgebra alg) {
      Piece p{alg.ring, alg.local_units, std::nullopt};
      p.algebra = std::move(alg);
      return p;
    }

    std::vector<Vec> grouped_units(std::size_t n, std::size_t blocks, Rng& rng) {
      // cut points chosen from the seed
      std::vector<std::size_t> cuts;
      for (std::size_t i = 1; i < n; ++i) {
        cuts.push_back(i);
      }
      for (std::size_t i = cuts.size(); i > 1; --i) {
        std::swap(cuts[i - 1], cuts[rng.below(i)]);
      }
      cuts.resize(blocks - 1);
      std::sort(cuts.begin(), cuts.end());
      cuts.push_back(n);
      std::vector<Vec> out;
      std::size_t      start = 0;
      for (auto end : cuts) {
        Vec v(n * n, 0);
        for (std::size_t i = start; i < end; ++i) {
          v[i * n + i] = 1;
        }
        out.push_back(std::move(v));
        start = end;
      }
      return out;
    }

    Coord modulus_param(std::int64_t m) {
      if (m < 2 || m > 1000) {
        out_of_range("modulus " + std::to_string(m) + " outside [2, 1000]");
      }
      return m;
    }

    std::uint64_t cap_param(std::int64_t cap) {
      if (cap < 2 || cap > (std::int64_t{1} << 40)) {
        out_of_range("order cap " + std::to_string(cap) + " outside [2, 2^40]");
      }
      return static_cast<std::uint64_t>(cap);
    }

    std::size_t count_param(std::int64_t v, std::int64_t lo, std::int64_t hi, char const* what) {
      if (v < lo || v > hi) {
        out_of_range(std::string(what) + " " + std::to_string(v) + " outside ["
                     + std::to_string(lo) + ", " + std::to_string(hi) + "]");
      }
      return static_cast<std::size_t>(v);
    }

    // Coset action of g on G/H for H the cyclic subgroup of a random
    // element, as permutations; rank = [G : H].
    std::vector<Map> coset_action(Monoid const& g, Rng& rng, std::size_t max_rank) {
      std::size_t const k = g.size;
      auto mul = [&](std::size_t x, std::size_t y) { return g.table[x * k + y]; };
      for (int attempt = 0; attempt < 8; ++attempt) {
        std::size_t              h = rng.below(k);
        std::vector<std::size_t> sub{g.identity};
        for (std::size_t p = h; p != g.identity; p = mul(p, h)) {
          sub.push_back(p);
        }
        // left cosets xH, each as a sorted member list
        std::vector<std::vector<std::size_t>> cosets;
        std::vector<std::size_t>              coset_of(k, k);
        for (std::size_t x = 0; x < k; ++x) {
          if (coset_of[x] != k) {
            continue;
          }
          std::vector<std::size_t> c;
          for (auto s : sub) {
            c.push_back(mul(x, s));
            coset_of[mul(x, s)] = cosets.size();
          }
          cosets.push_back(c);
        }
        if (cosets.size() > max_rank) {
          continue;
        }
        std::vector<Map> act;
        for (std::size_t x = 0; x < k; ++x) {
          Map p(cosets.size());
          for (std::size_t c = 0; c < cosets.size(); ++c) {
            p[c] = coset_of[mul(x, cosets[c][0])];
          }
          act.push_back(p);
        }
        return act;
      }
      return std::vector<Map>(k, Map{0});
    }

    SkewAlgebra skew_variant(Rng& rng, Coord m, int variant, std::size_t max_objects,
                             std::size_t max_rank, std::uint64_t cap) {
      for (int attempt = 0; attempt < 500; ++attempt) {
        std::size_t r      = rng.between(1, max_rank);
        std::size_t budget = log_floor(static_cast<std::uint64_t>(m), cap) / r;
        if (budget == 0) {
          continue;
        }
        if (variant == 1) {
          std::size_t s = rng.between(1, std::min<std::size_t>(max_objects, 2));
          if (s * s > budget) {
            continue;
          }
          Monoid g   = random_group(rng, budget / (s * s));
          auto   act = coset_action(g, rng, max_rank);
          auto   cat = build_MX(g, s);
          std::size_t rank = act[0].size();
          if (cat.morphism_count() * rank > log_floor(static_cast<std::uint64_t>(m), cap)) {
            continue;
          }
          FiniteRing           ring = diagonal_ring(m, rank);
          std::vector<RingMap> maps;
          for (std::size_t f = 0; f < cat.morphism_count(); ++f) {
            maps.push_back(permutation_map(act[f / (s * s)]));
          }
          std::vector<FiniteRing> rings(s, ring);
          return build_skew_algebra(validate_system(cat, std::move(rings), std::move(maps)));
        }
        SmallCategory cat = variant == 2
                                ? random_preorder(rng, rng.between(1, max_objects))
                                : random_category(rng, max_objects, std::min<std::size_t>(budget, 20), -1);
        if (cat.morphism_count() > budget) {
          continue;
        }
        return build_category_algebra(diagonal_ring(m, r), cat);
      }
      return build_category_algebra(make_ring(m, 1, {1}), trivial_category());
    }

    Piece small_piece(Rng& rng, Coord m, std::uint64_t cap, std::size_t max_idem) {
      bool matrix_fits = power(static_cast<std::uint64_t>(m), 4, cap) <= cap && max_idem >= 2;
      if (rng.chance(1, 3)) {
        std::size_t n = matrix_fits && rng.chance(1, 2) ? 2 : 1;
        return {matrix_ring(m, n), grouped_units(n, n, rng), std::nullopt};
      }
      return from_algebra(skew_variant(rng, m, 0, max_idem, 1, cap));
    }

    Instance build(Recipe const& recipe, std::uint64_t seed) {
      Rng      rng(seed);
      Instance out{recipe, seed, std::nullopt, {}, std::nullopt, std::nullopt};
      auto const& p = recipe.params;
      auto need = [&](std::size_t n) {
        if (p.size() != n) {
          out_of_range(std::string(to_string(recipe.kind)) + " takes " + idx(n)
                       + " parameters, got " + idx(p.size()));
        }
      };
      auto set_piece = [&](Piece piece) {
        out.ring        = piece.ring;
        out.idempotents = std::move(piece.idempotents);
        if (piece.algebra) {
          out.category = piece.algebra->grading.category;
          out.algebra  = std::move(piece.algebra);
        }
      };
      switch (recipe.kind) {
        case RecipeKind::matrix_ring: {
          need(3);
          Coord       m      = modulus_param(p[0]);
          std::size_t n      = count_param(p[1], 1, 6, "matrix size");
          std::size_t blocks = count_param(p[2], 1, static_cast<std::int64_t>(n), "blocks");
          if (power(static_cast<std::uint64_t>(m), n * n, kOrderLimit) > kOrderLimit) {
            out_of_range("M_" + idx(n) + "(Z/" + std::to_string(m) + ") exceeds order "
                         + std::to_string(kOrderLimit));
          }
          set_piece({matrix_ring(m, n), grouped_units(n, blocks, rng), std::nullopt});
          break;
        }
        case RecipeKind::monoid_algebra: {
          need(2);
          Coord  m     = modulus_param(p[0]);
          auto   names = monoid_names();
          Monoid mono  = p[1] < 0 ? random_transformation_monoid(rng, 8)
                                  : named_monoid(names.at(count_param(
                                        p[1], 0, static_cast<std::int64_t>(names.size()) - 1,
                                        "monoid index")));
          if (power(static_cast<std::uint64_t>(m), mono.size, kOrderLimit) > kOrderLimit) {
            out_of_range("monoid algebra exceeds order " + std::to_string(kOrderLimit));
          }
          set_piece(from_algebra(build_category_algebra(make_ring(m, 1, {1}), build_MX(mono, 1))));
          break;
        }
        case RecipeKind::skew_algebra: {
          need(5);
          Coord       m       = modulus_param(p[0]);
          int         variant = static_cast<int>(count_param(p[1], 0, 2, "variant"));
          std::size_t objects = count_param(p[2], 1, 4, "max objects");
          std::size_t rank    = count_param(p[3], 1, 6, "max rank");
          set_piece(from_algebra(skew_variant(rng, m, variant, objects, rank, cap_param(p[4]))));
          break;
        }
        case RecipeKind::direct_product: {
          need(3);
          Coord         m    = modulus_param(p[0]);
          std::uint64_t cap  = cap_param(p[1]);
          std::size_t   idem = count_param(p[2], 2, 8, "max idempotents");
          if (cap < static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(m)) {
            out_of_range("order cap below m^2");
          }
          Piece a = small_piece(rng, m, cap / static_cast<std::uint64_t>(m), idem - 1);
          Piece b = small_piece(rng, m, cap / a.ring.order(), idem - a.idempotents.size());
          std::vector<FiniteRing> both{a.ring, b.ring};
          FiniteRing              ring = direct_product(both);
          std::vector<Vec>        units;
          for (auto const& e : a.idempotents) {
            Vec v(e);
            v.resize(ring.rank(), 0);
            units.push_back(v);
          }
          for (auto const& e : b.idempotents) {
            Vec v(a.ring.rank(), 0);
            v.insert(v.end(), e.begin(), e.end());
            units.push_back(v);
          }
          set_piece({ring, units, std::nullopt});
          break;
        }
        case RecipeKind::corner: {
          need(2);
          Coord         m   = modulus_param(p[0]);
          std::uint64_t cap = cap_param(p[1]);
          for (int attempt = 0;; ++attempt) {
            if (attempt == 200) {
              out_of_range("no corner within the order cap");
            }
            auto alg = skew_variant(rng, m, rng.chance(1, 2) ? 0 : 2, 4, 1,
                                    std::min<std::uint64_t>(cap, std::uint64_t{1} << 36) * 16);
            std::size_t              objs = alg.local_units.size();
            std::vector<std::size_t> keep;
            for (std::size_t a = 0; a < objs; ++a) {
              if (rng.chance(1, 2)) {
                keep.push_back(a);
              }
            }
            if (keep.empty()) {
              keep.push_back(rng.below(objs));
            }
            Vec e(alg.ring.rank(), 0);
            for (auto a : keep) {
              e = alg.ring.add(e, alg.local_units[a]);
            }
            auto corner = corner_ring(alg.ring, alg.ring.element(e));
            if (corner.ring.order() > cap) {
              continue;
            }
            std::vector<Vec> units;
            for (auto a : keep) {
              units.push_back(corner.project(alg.ring.element(alg.local_units[a])));
            }
            set_piece({corner.ring, units, std::nullopt});
            break;
          }
          break;
        }
        case RecipeKind::mx_category: {
          need(2);
          auto        names = monoid_names();
          std::size_t s     = count_param(p[1], 1, 4, "set size");
          Monoid      mono  = p[0] < 0 ? random_transformation_monoid(rng, 20 / (s * s))
                                       : named_monoid(names.at(count_param(
                                             p[0], 0, static_cast<std::int64_t>(names.size()) - 1,
                                             "monoid index")));
          out.category = build_MX(mono, s);
          break;
        }
        case RecipeKind::random_groupoid: {
          need(2);
          std::size_t objects = count_param(p[0], 1, 8, "max objects");
          std::size_t q       = count_param(p[1], 1, 64, "max morphisms");
          out.category        = random_groupoid(rng, objects, q);
          break;
        }
        case RecipeKind::random_category: {
          need(3);
          std::size_t objects = count_param(p[0], 1, 8, "max objects");
          std::size_t q       = count_param(p[1], 1, 64, "max morphisms");
          int         flavor  = static_cast<int>(count_param(p[2] + 1, 0, 6, "flavor")) - 1;
          out.category        = random_category(rng, objects, q, flavor);
          break;
        }
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Suites
    ////////////////////////////////////////////////////////////////////////

    struct SuiteDef {
      std::string         name;
      std::uint64_t       base;
      std::vector<Recipe> recipes;
    };

    Recipe r(RecipeKind k, std::vector<std::int64_t> p) {
      return Recipe{k, std::move(p)};
    }

    std::vector<SuiteDef> const& suites() {
      static std::vector<SuiteDef> const defs = [] {
        using K = RecipeKind;
        std::vector<SuiteDef> out;

        SuiteDef p24{"prop-2.4", 0x5eed0204, {}};
        for (auto const& mn : std::vector<std::vector<std::int64_t>>{
                 {2, 1, 1}, {2, 2, 1}, {2, 2, 2}, {3, 1, 1}, {3, 2, 1}, {3, 2, 2}, {4, 2, 2},
                 {5, 1, 1}, {7, 1, 1}, {4, 1, 1}}) {
          p24.recipes.push_back(r(K::matrix_ring, mn));
        }
        for (std::int64_t i = 0; i < 9; ++i) {
          p24.recipes.push_back(r(K::monoid_algebra, {2, i}));
        }
        for (std::int64_t i : {0, 1, 2, 3, 4, 6, 7, 8}) {
          p24.recipes.push_back(r(K::monoid_algebra, {3, i}));
        }
        for (int i = 0; i < 4; ++i) {
          p24.recipes.push_back(r(K::monoid_algebra, {2, -1}));
        }
        std::int64_t const mods[] = {2, 3, 2, 4, 2, 5};
        for (int i = 0; i < 120; ++i) {
          p24.recipes.push_back(r(K::skew_algebra, {mods[i % 6], 0, 4, 1 + (i % 4 == 3), 256}));
        }
        for (int i = 0; i < 30; ++i) {
          p24.recipes.push_back(r(K::skew_algebra, {mods[i % 6], 2, 4, 1, 256}));
        }
        for (int i = 0; i < 16; ++i) {
          p24.recipes.push_back(r(K::skew_algebra, {i % 2 ? 3 : 2, 1, 2, 3, 256}));
        }
        for (int i = 0; i < 30; ++i) {
          p24.recipes.push_back(r(K::direct_product, {i % 3 ? 2 : 3, 256, 4}));
        }
        for (int i = 0; i < 30; ++i) {
          p24.recipes.push_back(r(K::corner, {i % 3 ? 2 : 3, 256}));
        }
        out.push_back(std::move(p24));

        SuiteDef p32{"prop-3.2", 0x5eed0302, {}};
        for (std::int64_t mono = 0; mono < 9; ++mono) {
          for (std::int64_t s = 1; s <= 3; ++s) {
            if (named_monoid(monoid_names()[static_cast<std::size_t>(mono)]).size
                    * static_cast<std::size_t>(s * s)
                <= 20) {
              p32.recipes.push_back(r(K::mx_category, {mono, s}));
            }
          }
        }
        for (int i = 0; i < 20; ++i) {
          p32.recipes.push_back(r(K::mx_category, {-1, 1 + i % 2}));
        }
        for (int i = 0; i < 480; ++i) {
          p32.recipes.push_back(r(K::random_category, {4, 20, i % 7 - 1}));
        }
        for (int i = 0; i < 40; ++i) {
          p32.recipes.push_back(r(K::random_groupoid, {4, 20}));
        }
        out.push_back(std::move(p32));

        SuiteDef grp{"groupoids", 0x5eed0a0a, {}};
        for (int i = 0; i < 120; ++i) {
          grp.recipes.push_back(r(K::random_groupoid, {4, 20}));
        }
        out.push_back(std::move(grp));

        SuiteDef ng{"notgroupoid", 0x5eed0b0b, {}};
        for (std::int64_t mono : {0, 1, 2, 6, 7}) {  // C1, C2, C3, Z01, T2
          for (std::int64_t s = 1; s <= 3; ++s) {
            ng.recipes.push_back(r(K::mx_category, {mono, s}));
          }
        }
        out.push_back(std::move(ng));

        SuiteDef p53{"prop-5.3", 0x5eed0503, {}};
        for (int i = 0; i < 60; ++i) {
          p53.recipes.push_back(r(K::skew_algebra, {i % 2 ? 3 : 2, 0, 4, 2, 4096}));
        }
        for (int i = 0; i < 30; ++i) {
          p53.recipes.push_back(r(K::skew_algebra, {i % 3 ? 2 : 3, 1, 2, 4, 65536}));
        }
        for (int i = 0; i < 20; ++i) {
          p53.recipes.push_back(r(K::skew_algebra, {i % 2 ? 2 : 5, 2, 4, 1 + i % 2, 4096}));
        }
        for (std::int64_t mono : {0, 1, 6, 7}) {
          p53.recipes.push_back(r(K::monoid_algebra, {2, mono}));
        }
        out.push_back(std::move(p53));
        return out;
      }();
      return defs;
    }

    SuiteDef const& suite(std::string_view name) {
      for (auto const& s : suites()) {
        if (s.name == name) {
          return s;
        }
      }
      std::string known;
      for (auto const& s : suites()) {
        known += (known.empty() ? "" : ", ") + s.name;
      }
      throw Error(ErrorKind::UnknownSuite, "unknown suite \"" + std::string(name)
                                               + "\" (known: " + known + ")");
    }

    std::uint64_t base_seed(SuiteDef const& def) {
      char const* env = std::getenv("WORKBENCH_SEED");
      if (env == nullptr || *env == '\0') {
        return def.base;
      }
      try {
        std::size_t used = 0;
        auto        v    = std::stoull(env, &used, 0);
        if (env[used] != '\0') {
          throw std::invalid_argument(env);
        }
        return v;
      } catch (std::exception const&) {
        out_of_range("WORKBENCH_SEED is not an unsigned integer: " + std::string(env));
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Mutations
    ////////////////////////////////////////////////////////////////////////

    [[noreturn]] void cannot(Axiom a, std::string const& why) {
      throw Error(ErrorKind::CannotTarget, std::string(to_string(a)) + ": " + why);
    }

    // Non-identity basis permutations that are ring automorphisms.
    std::vector<RingMap> permutation_automorphisms(FiniteRing const& ring) {
      std::size_t const    n = ring.rank();
      std::vector<RingMap> out;
      Map                  p(n);
      for (std::size_t i = 0; i < n; ++i) {
        p[i] = i;
      }
      auto consider = [&](Map const& q) {
        auto a = permutation_map(q);
        if (a != identity_map(n) && ring_iso_defect(ring, ring, a).empty()) {
          out.push_back(a);
        }
      };
      if (n <= 5) {
        while (std::next_permutation(p.begin(), p.end())) {
          consider(p);
        }
      } else {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) {
            Map q = p;
            std::swap(q[i], q[j]);
            consider(q);
          }
        }
      }
      return out;
    }

    std::vector<std::size_t> rotated(std::size_t n, std::uint64_t seed) {
      std::vector<std::size_t> order(n);
      for (std::size_t i = 0; i < n; ++i) {
        order[i] = (i + seed) % n;
      }
      return order;
    }

    Mutated mutate_idempotents(Instance const& inst, Mutation const& mu) {
      Mutated out;
      out.mutation = mu;
      if (!inst.ring || inst.idempotents.empty()) {
        cannot(mu.target, "instance has no idempotent set");
      }
      FiniteRing const& ring = *inst.ring;
      auto              es   = inst.idempotents;
      std::size_t const k    = es.size();
      std::size_t const i    = mu.seed % k;
      out.ring               = ring;
      switch (mu.target) {
        case Axiom::zero_idempotent:
          es[i]           = ring.zero_vector();
          out.expected    = ErrorKind::ZeroIdempotent;
          out.description = "replace e" + idx(i) + " by 0";
          break;
        case Axiom::idempotence: {
          std::vector<Vec> candidates;
          candidates.push_back(ring.add(es[i], es[i]));
          for (std::size_t b = 0; b < ring.rank(); ++b) {
            candidates.push_back(ring.basis_vector(b));
            candidates.push_back(ring.add(es[i], ring.basis_vector(b)));
          }
          auto it = std::find_if(candidates.begin(), candidates.end(), [&](Vec const& x) {
            return !zmod::is_zero(x) && ring.multiply(x, x) != x;
          });
          if (it == candidates.end()) {
            cannot(mu.target, "no non-idempotent candidate (every element tried is idempotent)");
          }
          out.description = "replace e" + idx(i) + " by a non-idempotent "
                            + format(ring.element(*it));
          es[i]        = *it;
          out.expected = ErrorKind::NotIdempotent;
          break;
        }
        case Axiom::orthogonality: {
          if (k < 2) {
            cannot(mu.target, "a single idempotent is trivially orthogonal");
          }
          std::size_t j   = (i + 1) % k;
          es[j]           = es[i];
          out.expected    = ErrorKind::NotOrthogonal;
          out.description = "replace e" + idx(j) + " by e" + idx(i);
          break;
        }
        case Axiom::completeness: {
          if (k < 2) {
            cannot(mu.target, "dropping the only idempotent leaves an empty set");
          }
          es.erase(es.begin() + static_cast<std::ptrdiff_t>(i));
          out.expected    = ErrorKind::NotComplete;
          out.description = "drop e" + idx(i);
          break;
        }
        default:
          break;
      }
      out.elements = std::move(es);
      return out;
    }

    Mutated mutate_ring(Instance const& inst, Mutation const& mu) {
      if (!inst.ring) {
        cannot(mu.target, "instance has no ring");
      }
      RingSpec const&   base = inst.ring->spec();
      std::size_t const n    = base.constants.size();
      for (auto pos : rotated(n, mu.seed)) {
        RingSpec spec = base;
        spec.constants[pos] = (spec.constants[pos] + 1) % spec.modulus;
        try {
          make_ring(spec);
        } catch (Error const& e) {
          if (e.kind() == ErrorKind::NotAssociative) {
            Mutated out;
            out.mutation    = mu;
            out.ring_spec   = std::move(spec);
            out.expected    = ErrorKind::NotAssociative;
            std::size_t r   = base.rank;
            out.description = "structure constant (" + idx(pos / (r * r)) + "," + idx(pos / r % r)
                              + "," + idx(pos % r) + ") incremented";
            return out;
          }
          throw;
        }
      }
      cannot(mu.target, "every single-constant perturbation stays associative");
    }

    Mutated mutate_category(Instance const& inst, Mutation const& mu) {
      if (!inst.category) {
        cannot(mu.target, "instance has no category");
      }
      SmallCategory const& cat = *inst.category;
      std::size_t const    q   = cat.morphism_count();
      std::vector<bool>    is_id(q, false);
      for (std::size_t a = 0; a < cat.object_count(); ++a) {
        is_id[cat.identity(a)] = true;
      }
      for (auto pos : rotated(q * q, mu.seed)) {
        std::size_t g = pos / q, h = pos % q;
        if (!cat.composable(g, h)) {
          continue;
        }
        bool identity_pair = is_id[g] || is_id[h];
        if (identity_pair != (mu.target == Axiom::identity_law)) {
          continue;
        }
        if (mu.target == Axiom::identity_law && !is_id[g]) {
          continue;  // use id * h so the law is broken on the left
        }
        std::size_t gh = cat.compose(g, h);
        for (auto alt : cat.hom(cat.cod(gh), cat.dom(gh))) {
          if (alt == gh) {
            continue;
          }
          CategorySpec spec        = cat.spec();
          spec.compose[g * q + h]  = alt;
          ErrorKind    want        = mu.target == Axiom::identity_law
                                         ? ErrorKind::IdentityLawViolation
                                         : ErrorKind::NotAssociative;
          try {
            make_category(spec);
            continue;  // still a category
          } catch (Error const& e) {
            if (e.kind() != want) {
              continue;
            }
          }
          Mutated out;
          out.mutation      = mu;
          out.category_spec = std::move(spec);
          out.expected      = want;
          out.description   = "composite (" + idx(g) + "," + idx(h) + ") changed from " + idx(gh)
                            + " to " + idx(alt);
          return out;
        }
      }
      cannot(mu.target, mu.target == Axiom::identity_law
                            ? "every hom-set has a single morphism"
                            : "no single composite change breaks associativity");
    }

    Mutated mutate_system(Instance const& inst, Mutation const& mu) {
      if (!inst.algebra) {
        cannot(mu.target, "instance has no skew category system");
      }
      auto const&       sys = inst.algebra->system;
      auto const&       cat = sys.category;
      std::size_t const q   = cat.morphism_count();
      Mutated           out;
      out.mutation = mu;
      out.system   = sys;
      out.maps     = sys.maps;
      switch (mu.target) {
        case Axiom::ring_iso: {
          std::size_t g   = mu.seed % q;
          std::fill(out.maps[g].begin(), out.maps[g].end(), Coord{0});
          out.expected    = ErrorKind::NotRingIso;
          out.description = "map of morphism " + idx(g) + " set to zero";
          return out;
        }
        case Axiom::identity_map: {
          for (auto a : rotated(cat.object_count(), mu.seed)) {
            auto autos = permutation_automorphisms(sys.ring_at(a));
            if (autos.empty()) {
              continue;
            }
            out.maps[cat.identity(a)] = autos[mu.seed % autos.size()];
            out.expected              = ErrorKind::IdentityNotIdentity;
            out.description = "identity at object " + idx(a) + " sent to a non-trivial automorphism";
            return out;
          }
          cannot(mu.target, "no object ring has a non-trivial basis-permutation automorphism");
        }
        case Axiom::functoriality: {
          for (auto g : rotated(q, mu.seed)) {
            auto const& target = sys.ring_at(cat.cod(g));
            for (auto const& tau : permutation_automorphisms(target)) {
              auto maps = sys.maps;
              maps[g]   = compose_maps(tau, maps[g], sys.ring_at(cat.dom(g)).rank(),
                                       target.rank(), target.rank(), target.modulus());
              try {
                validate_system(cat, sys.object_rings, maps);
              } catch (Error const& e) {
                if (e.kind() == ErrorKind::NotFunctorial) {
                  out.maps        = std::move(maps);
                  out.expected    = ErrorKind::NotFunctorial;
                  out.description = "map of morphism " + idx(g)
                                    + " followed by a non-trivial automorphism";
                  return out;
                }
              }
            }
          }
          cannot(mu.target, "every automorphism twist of a single map stays functorial");
        }
        default:
          break;
      }
      cannot(mu.target, "not a system axiom");
    }

  }  // namespace

  std::string_view to_string(RecipeKind kind) noexcept {
    switch (kind) {
      case RecipeKind::matrix_ring: return "matrix_ring";
      case RecipeKind::monoid_algebra: return "monoid_algebra";
      case RecipeKind::skew_algebra: return "skew_algebra";
      case RecipeKind::direct_product: return "direct_product";
      case RecipeKind::corner: return "corner";
      case RecipeKind::mx_category: return "mx_category";
      case RecipeKind::random_groupoid: return "random_groupoid";
      case RecipeKind::random_category: return "random_category";
    }
    return "?";
  }

  std::optional<RecipeKind> recipe_kind(std::string_view name) {
    for (int k = 0; k <= static_cast<int>(RecipeKind::random_category); ++k) {
      if (to_string(static_cast<RecipeKind>(k)) == name) {
        return static_cast<RecipeKind>(k);
      }
    }
    return std::nullopt;
  }

  std::string describe(Recipe const& recipe) {
    std::string s(to_string(recipe.kind));
    for (auto v : recipe.params) {
      s += " " + std::to_string(v);
    }
    return s;
  }

  Instance generate(Recipe const& recipe, std::uint64_t seed) {
    return build(recipe, seed);
  }

  io::Json serialize(Instance const& inst) {
    io::Json j{{"recipe", describe(inst.recipe)}, {"seed", inst.seed}};
    if (inst.ring) {
      j["ring"] = io::ring_to_json(*inst.ring);
    }
    if (!inst.idempotents.empty()) {
      j["idempotents"] = inst.idempotents;
    }
    if (inst.category) {
      j["category"] = io::category_to_json(*inst.category);
    }
    if (inst.algebra) {
      j["system"] = io::system_to_json(inst.algebra->system);
    }
    return j;
  }

  std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (auto const& s : suites()) {
      out.push_back(s.name);
    }
    return out;
  }

  std::vector<SuiteEntry> suite_plan(std::string_view name) {
    auto const&             def  = suite(name);
    std::uint64_t           base = base_seed(def);
    std::vector<SuiteEntry> out;
    for (std::size_t i = 0; i < def.recipes.size(); ++i) {
      out.push_back({def.recipes[i], base + i});
    }
    return out;
  }

  std::vector<Instance> generate_suite(std::string_view name) {
    std::vector<Instance> out;
    for (auto const& e : suite_plan(name)) {
      out.push_back(generate(e.recipe, e.seed));
    }
    return out;
  }

  std::string manifest(std::string_view name) {
    auto              plan = suite_plan(name);
    std::ostringstream os;
    os << "# suite " << name << ": " << plan.size() << " instances\n";
    os << "# index recipe params seed digest\n";
    for (std::size_t i = 0; i < plan.size(); ++i) {
      auto inst = generate(plan[i].recipe, plan[i].seed);
      os << i << " " << describe(plan[i].recipe) << " seed=" << plan[i].seed
         << " digest=" << io::digest(serialize(inst)) << "\n";
    }
    return os.str();
  }

  std::string_view to_string(Axiom a) noexcept {
    switch (a) {
      case Axiom::zero_idempotent: return "zero_idempotent";
      case Axiom::idempotence: return "idempotence";
      case Axiom::orthogonality: return "orthogonality";
      case Axiom::completeness: return "completeness";
      case Axiom::ring_associativity: return "ring_associativity";
      case Axiom::composition: return "composition";
      case Axiom::identity_law: return "identity_law";
      case Axiom::ring_iso: return "ring_iso";
      case Axiom::identity_map: return "identity_map";
      case Axiom::functoriality: return "functoriality";
    }
    return "?";
  }

  std::vector<Axiom> all_axioms() {
    std::vector<Axiom> out;
    for (int a = 0; a <= static_cast<int>(Axiom::functoriality); ++a) {
      out.push_back(static_cast<Axiom>(a));
    }
    return out;
  }

  std::optional<Axiom> axiom_named(std::string_view name) {
    for (auto a : all_axioms()) {
      if (to_string(a) == name) {
        return a;
      }
    }
    return std::nullopt;
  }

  Mutated mutate(Instance const& instance, Mutation const& mutation) {
    switch (mutation.target) {
      case Axiom::zero_idempotent:
      case Axiom::idempotence:
      case Axiom::orthogonality:
      case Axiom::completeness:
        return mutate_idempotents(instance, mutation);
      case Axiom::ring_associativity:
        return mutate_ring(instance, mutation);
      case Axiom::composition:
      case Axiom::identity_law:
        return mutate_category(instance, mutation);
      default:
        return mutate_system(instance, mutation);
    }
  }

  std::optional<ErrorKind> revalidate(Mutated const& m) {
    try {
      if (m.ring_spec) {
        make_ring(*m.ring_spec);
      } else if (m.category_spec) {
        make_category(*m.category_spec);
      } else if (m.system) {
        validate_system(m.system->category, m.system->object_rings, m.maps);
      } else if (m.ring) {
        std::vector<Element> es;
        for (auto const& v : m.elements) {
          es.push_back(m.ring->element(v));
        }
        validate_complete_set(*m.ring, es);
      }
    } catch (Error const& e) {
      return e.kind();
    }
    return std::nullopt;
  }

  MutationMatrix mutation_matrix(std::size_t per_axiom) {
    MutationMatrix out;
    std::map<std::string, std::vector<Instance>> cache;
    auto instances = [&](std::string const& name) -> std::vector<Instance> const& {
      auto it = cache.find(name);
      if (it == cache.end()) {
        it = cache.emplace(name, generate_suite(name)).first;
      }
      return it->second;
    };
    for (auto a : all_axioms()) {
      std::string name = a <= Axiom::ring_associativity ? "prop-2.4"
                         : a <= Axiom::identity_law     ? "prop-3.2"
                                                        : "prop-5.3";
      auto const& list  = instances(name);
      // strided sweep so the entries spread over the suite
      std::size_t              step = std::max<std::size_t>(1, list.size() / (2 * per_axiom));
      std::vector<std::size_t> order;
      for (std::size_t offset = 0; offset < step; ++offset) {
        for (std::size_t i = offset; i < list.size(); i += step) {
          order.push_back(i);
        }
      }
      std::size_t taken = 0;
      for (std::size_t i : order) {
        if (taken == per_axiom) {
          break;
        }
        try {
          out.entries.push_back(
              {name, i, mutate(list[i], {a, list[i].seed ^ static_cast<std::uint64_t>(a)})});
          ++taken;
        } catch (Error const& e) {
          if (e.kind() != ErrorKind::CannotTarget) {
            throw;
          }
          ++out.untargetable;
        }
      }
    }
    return out;
  }

}  // namespace peirce::corpus
