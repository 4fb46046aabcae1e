// Brute force oracles for the test suites.
//
// Everything here works on explicit element sets of a ring given by its raw
// structure constants; nothing goes through Howell forms, Subgroup or the
// lattice enumerator, so agreement with the library is an independent check.
// Only usable for rings with a few hundred elements at most.

#ifndef PEIRCE_TESTS_ORACLE_HPP_
#define PEIRCE_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "peirce/finring.hpp"

namespace oracle {

  using peirce::Coord;
  using peirce::Vec;
  using Set = std::vector<bool>;  // indexed by element number

  struct Ring {
    Coord              m;
    std::size_t        n;
    std::vector<Coord> c;  // (i*n + j)*n + k

    explicit Ring(peirce::RingSpec const& spec)
        : m(spec.modulus), n(spec.rank), c(spec.constants) {}

    std::size_t size() const {
      std::size_t s = 1;
      for (std::size_t i = 0; i < n; ++i) {
        s *= static_cast<std::size_t>(m);
      }
      return s;
    }

    Vec decode(std::size_t idx) const {
      Vec v(n);
      for (std::size_t i = n; i-- > 0;) {
        v[i] = static_cast<Coord>(idx % m);
        idx /= m;
      }
      return v;
    }

    std::size_t encode(Vec const& v) const {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < n; ++i) {
        idx = idx * m + static_cast<std::size_t>(((v[i] % m) + m) % m);
      }
      return idx;
    }

    Vec mul(Vec const& x, Vec const& y) const {
      Vec r(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            r[k] = (r[k] + x[i] * y[j] % m * c[(i * n + j) * n + k]) % m;
          }
        }
      }
      return r;
    }

    Vec add(Vec const& x, Vec const& y) const {
      Vec r(n);
      for (std::size_t i = 0; i < n; ++i) {
        r[i] = (x[i] + y[i]) % m;
      }
      return r;
    }

    std::size_t mul(std::size_t a, std::size_t b) const {
      return encode(mul(decode(a), decode(b)));
    }
    std::size_t add(std::size_t a, std::size_t b) const {
      return encode(add(decode(a), decode(b)));
    }
  };

  // Cached tables so closures are cheap.
  struct Tables {
    Ring                                  ring;
    std::size_t                           size;
    std::vector<std::vector<std::size_t>> add, mul;

    explicit Tables(peirce::RingSpec const& spec) : ring(spec), size(ring.size()) {
      add.assign(size, std::vector<std::size_t>(size));
      mul.assign(size, std::vector<std::size_t>(size));
      for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = 0; b < size; ++b) {
          add[a][b] = ring.add(a, b);
          mul[a][b] = ring.mul(a, b);
        }
      }
    }
  };

  inline std::size_t count(Set const& s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), true));
  }

  inline bool subset(Set const& a, Set const& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] && !b[i]) {
        return false;
      }
    }
    return true;
  }

  // Closure of `start` under addition and, if `actors` is nonempty, under
  // multiplication by every actor on the given side.
  inline Set close(Tables const&                   t,
                   Set                             set,
                   std::vector<std::size_t> const& actors,
                   peirce::Side                    side) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < t.size; ++i) {
      if (set[i]) {
        members.push_back(i);
      }
    }
    if (!set[0]) {
      set[0] = true;
      members.push_back(0);
    }
    std::vector<std::size_t> work(members);
    while (!work.empty()) {
      std::size_t x = work.back();
      work.pop_back();
      std::vector<std::size_t> fresh;
      for (std::size_t y : members) {
        fresh.push_back(t.add[x][y]);
      }
      for (std::size_t a : actors) {
        fresh.push_back(side == peirce::Side::left ? t.mul[a][x] : t.mul[x][a]);
      }
      for (std::size_t z : fresh) {
        if (!set[z]) {
          set[z] = true;
          members.push_back(z);
          work.push_back(z);
        }
      }
    }
    return set;
  }

  inline Set additive_closure(Tables const& t, std::vector<Vec> const& gens) {
    Set s(t.size, false);
    for (auto const& g : gens) {
      s[t.ring.encode(g)] = true;
    }
    return close(t, std::move(s), {}, peirce::Side::left);
  }

  // All submodules of the additive group `ambient` closed under the actors,
  // by adding one element at a time starting from {0}.
  inline std::vector<Set> submodules(Tables const&                   t,
                                     Set const&                      ambient,
                                     std::vector<std::size_t> const& actors,
                                     peirce::Side                    side) {
    Set zero(t.size, false);
    zero[0] = true;
    std::set<Set>    seen{zero};
    std::vector<Set> work{zero};
    while (!work.empty()) {
      Set current = std::move(work.back());
      work.pop_back();
      for (std::size_t x = 0; x < t.size; ++x) {
        if (!ambient[x] || current[x]) {
          continue;
        }
        Set next = current;
        next[x]  = true;
        next     = close(t, std::move(next), actors, side);
        if (seen.insert(next).second) {
          work.push_back(std::move(next));
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

  inline std::vector<Set> one_sided_ideals(Tables const& t, peirce::Side side) {
    std::vector<std::size_t> all(t.size);
    for (std::size_t i = 0; i < t.size; ++i) {
      all[i] = i;
    }
    return submodules(t, Set(t.size, true), all, side);
  }

  // Longest chain (edge count) under strict inclusion.
  inline std::size_t height(std::vector<Set> sets) {
    std::sort(sets.begin(), sets.end(), [](Set const& a, Set const& b) {
      return count(a) < count(b);
    });
    std::vector<std::size_t> level(sets.size(), 0);
    std::size_t              best = 0;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (count(sets[i]) < count(sets[j]) && subset(sets[i], sets[j])) {
          level[j] = std::max(level[j], level[i] + 1);
        }
      }
      best = std::max(best, level[j]);
    }
    return best;
  }

  // {x s y : s in S} for fixed x, y given as element numbers.
  inline Set sandwich(Tables const& t, std::size_t x, std::size_t y) {
    Set out(t.size, false);
    for (std::size_t s = 0; s < t.size; ++s) {
      out[t.mul[t.mul[x][s]][y]] = true;
    }
    return out;
  }

  // Additive closure of all products a b with a in A, b in B.
  inline Set product(Tables const& t, Set const& a, Set const& b) {
    Set out(t.size, false);
    out[0] = true;
    for (std::size_t x = 0; x < t.size; ++x) {
      for (std::size_t y = 0; a[x] && y < t.size; ++y) {
        if (b[y]) {
          out[t.mul[x][y]] = true;
        }
      }
    }
    return close(t, std::move(out), {}, peirce::Side::left);
  }

  inline std::vector<std::size_t> indices(Set const& s) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i]) {
        out.push_back(i);
      }
    }
    return out;
  }

  inline bool is_zero_set(Set const& s) {
    return count(s) == 1;
  }

  // The three strong conditions on Peirce blocks, evaluated on element sets.
  struct StrongVerdicts {
    bool c1 = true, c2 = true, c3 = true;
  };

  inline StrongVerdicts strong_conditions(Tables const&                   t,
                                          std::vector<std::size_t> const& e) {
    std::size_t      k = e.size();
    std::vector<Set> b(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        b[i * k + j] = sandwich(t, e[i], e[j]);
      }
    }
    auto           nz = [&](std::size_t i, std::size_t j) { return !is_zero_set(b[i * k + j]); };
    StrongVerdicts v;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t l = 0; l < k; ++l) {
          int n = int(nz(i, j)) + int(nz(j, l)) + int(nz(i, l));
          if (n == 2 || (n == 3 && product(t, b[i * k + j], b[j * k + l]) != b[i * k + l])) {
            v.c1 = false;
          }
        }
      }
    }
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t q = 0; q < k; ++q) {
        if (!nz(p, q) && !nz(q, p)) {
          continue;
        }
        if (nz(p, q) != nz(q, p)) {
          v.c2 = v.c3 = false;
          continue;
        }
        Set pr = product(t, b[p * k + q], b[q * k + p]);
        v.c2   = v.c2 && pr == b[p * k + p];
        v.c3   = v.c3 && pr[e[p]];
      }
    }
    return v;
  }

  // First failing basis triple of the associativity law, if any.
  inline bool associative(peirce::RingSpec const& spec) {
    Ring r(spec);
    for (std::size_t i = 0; i < r.n; ++i) {
      for (std::size_t j = 0; j < r.n; ++j) {
        for (std::size_t k = 0; k < r.n; ++k) {
          Vec bi(r.n, 0), bj(r.n, 0), bk(r.n, 0);
          bi[i] = bj[j] = bk[k] = 1;
          if (r.mul(r.mul(bi, bj), bk) != r.mul(bi, r.mul(bj, bk))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Matrix ring M_k(Z/m) with basis E_ab at index a*k + b.
  inline peirce::RingSpec matrix_units(Coord m, std::size_t k) {
    std::size_t      n = k * k;
    peirce::RingSpec spec{m, n, {}, std::vector<Coord>(n * n * n, 0)};
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t d = 0; d < k; ++d) {
          // E_ab E_bd = E_ad
          spec.constants[((a * k + b) * n + (b * k + d)) * n + (a * k + d)] = 1;
        }
      }
    }
    return spec;
  }

  // Upper triangular T_2(Z/m) with basis E11, E12, E22.
  inline peirce::RingSpec upper_triangular(Coord m) {
    peirce::RingSpec spec{m, 3, {"E11", "E12", "E22"}, std::vector<Coord>(27, 0)};
    auto set = [&](int i, int j, int k) { spec.constants[(i * 3 + j) * 3 + k] = 1; };
    set(0, 0, 0);  // E11 E11 = E11
    set(0, 1, 1);  // E11 E12 = E12
    set(1, 2, 1);  // E12 E22 = E12
    set(2, 2, 2);  // E22 E22 = E22
    return spec;
  }

}  // namespace oracle

#endif  // PEIRCE_TESTS_ORACLE_HPP_
