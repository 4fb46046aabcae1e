#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "peirce/zmod.hpp"

using namespace peirce;

namespace {

  Vec random_vec(std::mt19937_64& rng, std::size_t n, Coord m) {
    Vec v(n);
    for (auto& x : v) {
      x = static_cast<Coord>(rng() % static_cast<std::uint64_t>(m));
    }
    return v;
  }

  RingSpec zero_mult(Coord m, std::size_t n) {
    return RingSpec{m, n, {}, std::vector<Coord>(n * n * n, 0)};
  }

  std::vector<Vec> members(oracle::Tables const& t, oracle::Set const& s) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < t.size; ++i) {
      if (s[i]) {
        out.push_back(t.ring.decode(i));
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("normalizing unit maps a residue onto its gcd with m") {
  for (Coord m : {2, 4, 6, 8, 9, 12, 30}) {
    for (Coord a = 1; a < m; ++a) {
      Coord u = zmod::normalizing_unit(a, m);
      CHECK(zmod::gcd(u, m) == 1);
      CHECK((u * a) % m == zmod::gcd(a, m));
    }
  }
}

TEST_CASE("Howell span agrees with brute force additive closure") {
  std::mt19937_64 rng(7);
  for (Coord m : {2, 3, 4, 6, 8, 9, 12}) {
    std::size_t   n = m <= 4 ? 3 : 2;
    oracle::Tables t(zero_mult(m, n));
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Vec> gens;
      std::size_t      count = rng() % 4;
      for (std::size_t i = 0; i < count; ++i) {
        gens.push_back(random_vec(rng, n, m));
      }
      auto howell   = zmod::howell_form(gens, n, m);
      auto expected = oracle::additive_closure(t, gens);
      CHECK(zmod::span_order(howell, m) == oracle::count(expected));
      for (std::size_t idx = 0; idx < t.size; ++idx) {
        CHECK(zmod::reduce_against(howell, t.ring.decode(idx), m)
              == expected[idx]);
      }
      // Uniqueness: any generating set of the same group gives the same form.
      auto all = members(t, expected);
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(std::min<std::size_t>(all.size(), 5 + rng() % 6));
      std::vector<Vec> regen(howell);
      regen.insert(regen.end(), all.begin(), all.end());
      std::shuffle(regen.begin(), regen.end(), rng);
      CHECK(zmod::howell_form(regen, n, m) == howell);
      CHECK(zmod::howell_form(members(t, expected), n, m) == howell);
    }
  }
}

TEST_CASE("Howell coefficients are in range and reproduce the vector") {
  std::mt19937_64 rng(11);
  Coord const     m = 12;
  std::size_t     n = 3;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vec> gens{random_vec(rng, n, m), random_vec(rng, n, m)};
    auto             howell = zmod::howell_form(gens, n, m);
    Vec              target(n, 0);
    zmod::add_multiple(target, gens[0], static_cast<Coord>(rng() % m), m);
    zmod::add_multiple(target, gens[1], static_cast<Coord>(rng() % m), m);
    Vec c;
    REQUIRE(zmod::reduce_against(howell, target, m, &c));
    Vec rebuilt(n, 0);
    for (std::size_t r = 0; r < howell.size(); ++r) {
      Coord bound = m / howell[r][zmod::leading_index(howell[r])];
      CHECK(c[r] >= 0);
      CHECK(c[r] < bound);
      zmod::add_multiple(rebuilt, howell[r], c[r], m);
    }
    CHECK(rebuilt == target);
  }
}

TEST_CASE("solve_left finds a solution exactly when one exists") {
  std::mt19937_64 rng(3);
  for (Coord m : {2, 4, 6, 9}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t      k = 1 + rng() % 3, w = 1 + rng() % 3;
      std::vector<Vec> a;
      for (std::size_t i = 0; i < k; ++i) {
        a.push_back(random_vec(rng, w, m));
      }
      Vec  b   = random_vec(rng, w, m);
      auto sol = zmod::solve_left(a, b, m);
      // brute force over all x in (Z/m)^k
      bool        exists = false;
      std::size_t total  = 1;
      for (std::size_t i = 0; i < k; ++i) {
        total *= static_cast<std::size_t>(m);
      }
      for (std::size_t idx = 0; idx < total && !exists; ++idx) {
        Vec         x(k);
        std::size_t rest = idx;
        for (auto& xi : x) {
          xi = static_cast<Coord>(rest % m);
          rest /= m;
        }
        Vec y(w, 0);
        for (std::size_t i = 0; i < k; ++i) {
          zmod::add_multiple(y, a[i], x[i], m);
        }
        exists = y == b;
      }
      CHECK(sol.has_value() == exists);
      if (sol) {
        Vec y(w, 0);
        for (std::size_t i = 0; i < k; ++i) {
          zmod::add_multiple(y, a[i], (*sol)[i], m);
        }
        CHECK(y == b);
      }
    }
  }
}

TEST_CASE("intersection of spans matches set intersection") {
  std::mt19937_64 rng(5);
  for (Coord m : {4, 6}) {
    std::size_t    n = 2;
    oracle::Tables t(zero_mult(m, n));
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Vec> a{random_vec(rng, n, m)}, b{random_vec(rng, n, m)};
      if (trial % 2) {
        a.push_back(random_vec(rng, n, m));
      }
      auto sa = oracle::additive_closure(t, a);
      auto sb = oracle::additive_closure(t, b);
      auto meet = zmod::intersect(
          zmod::howell_form(a, n, m), zmod::howell_form(b, n, m), n, m);
      for (std::size_t idx = 0; idx < t.size; ++idx) {
        CHECK(zmod::reduce_against(meet, t.ring.decode(idx), m)
              == (sa[idx] && sb[idx]));
      }
      CHECK(zmod::howell_form(meet, n, m) == meet);
    }
  }
}
