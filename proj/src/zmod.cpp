#include "peirce/zmod.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace peirce::zmod {

  namespace {
    struct Xgcd {
      Coord g, s, t;  // s * a + t * b = g
    };

    Xgcd xgcd(Coord a, Coord b) noexcept {
      Coord old_r = a, r = b;
      Coord old_s = 1, s = 0;
      Coord old_t = 0, t = 1;
      while (r != 0) {
        Coord q = old_r / r;
        old_r   = std::exchange(r, old_r - q * r);
        old_s   = std::exchange(s, old_s - q * s);
        old_t   = std::exchange(t, old_t - q * t);
      }
      return {old_r, old_s, old_t};
    }
  }  // namespace

  Coord gcd(Coord a, Coord b) noexcept {
    return std::gcd(a, b);
  }

  std::optional<Coord> inverse(Coord a, Coord m) {
    auto x = xgcd(reduce(a, m), m);
    if (x.g != 1) {
      return std::nullopt;
    }
    return reduce(x.s, m);
  }

  Coord normalizing_unit(Coord a, Coord m) {
    a = reduce(a, m);
    if (a == 0) {
      return 1;
    }
    Coord g       = std::gcd(a, m);
    Coord a_prime = a / g;
    Coord m_prime = m / g;
    Coord u0      = m_prime == 1 ? 1 : *inverse(a_prime, m_prime);
    for (Coord u = u0; u < m + m_prime; u += m_prime) {
      if (std::gcd(u, m) == 1) {
        return reduce(u, m);
      }
    }
    throw std::logic_error("normalizing_unit: no unit lifts the inverse");
  }

  void add_multiple(Vec& target, Vec const& source, Coord factor, Coord m) {
    factor = reduce(factor, m);
    if (factor == 0) {
      return;
    }
    for (std::size_t i = 0; i < target.size(); ++i) {
      target[i] = (target[i] + factor * source[i]) % m;
    }
  }

  bool is_zero(Vec const& v) noexcept {
    for (Coord x : v) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  std::size_t leading_index(Vec const& v) noexcept {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) {
        return i;
      }
    }
    return v.size();
  }

  std::vector<Vec> howell_form(std::vector<Vec> rows,
                               std::size_t      width,
                               Coord            m) {
    for (auto& row : rows) {
      for (auto& x : row) {
        x = reduce(x, m);
      }
    }
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < width; ++col) {
      // gcd-eliminate column `col` below the pivot row; the number of rows
      // may grow while we go since annihilator rows are appended.
      for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
        if (pivot_row >= rows.size() || rows[i][col] == 0) {
          continue;
        }
        if (rows[pivot_row][col] == 0) {
          std::swap(rows[pivot_row], rows[i]);
          continue;
        }
        Coord a = rows[pivot_row][col];
        Coord b = rows[i][col];
        auto [g, s, t] = xgcd(a, b);
        Coord bg = b / g, ag = a / g;
        Vec&  r = rows[pivot_row];
        Vec&  q = rows[i];
        for (std::size_t k = col; k < width; ++k) {
          Coord rk = r[k], qk = q[k];
          r[k]     = reduce(s * rk + t * qk, m);
          q[k]     = reduce(bg * rk - ag * qk, m);
        }
      }
      if (pivot_row >= rows.size() || rows[pivot_row][col] == 0) {
        continue;
      }
      Vec&  r = rows[pivot_row];
      Coord u = normalizing_unit(r[col], m);
      for (std::size_t k = col; k < width; ++k) {
        r[k] = (r[k] * u) % m;
      }
      Coord p = r[col];
      for (std::size_t i = 0; i < pivot_row; ++i) {
        Coord quotient = rows[i][col] / p;
        if (quotient != 0) {
          add_multiple(rows[i], r, m - quotient, m);
        }
      }
      Vec annihilated(r);
      for (auto& x : annihilated) {
        x = (x * (m / p)) % m;
      }
      ++pivot_row;
      if (!is_zero(annihilated)) {
        rows.push_back(std::move(annihilated));
      }
    }
    rows.resize(std::min(pivot_row, rows.size()));
    return rows;
  }

  bool reduce_against(std::vector<Vec> const& howell,
                      Vec                     v,
                      Coord                   m,
                      Vec*                    coefficients) {
    for (auto& x : v) {
      x = reduce(x, m);
    }
    if (coefficients != nullptr) {
      coefficients->assign(howell.size(), 0);
    }
    for (std::size_t r = 0; r < howell.size(); ++r) {
      std::size_t col  = leading_index(howell[r]);
      std::size_t lead = leading_index(v);
      if (lead < col) {
        return false;
      }
      if (lead > col) {
        continue;
      }
      Coord p = howell[r][col];
      if (v[col] % p != 0) {
        return false;
      }
      Coord c = v[col] / p;
      add_multiple(v, howell[r], m - c, m);
      if (coefficients != nullptr) {
        (*coefficients)[r] = c;
      }
    }
    return is_zero(v);
  }

  std::uint64_t span_order(std::vector<Vec> const& howell, Coord m) {
    std::uint64_t order = 1;
    for (auto const& row : howell) {
      order *= static_cast<std::uint64_t>(m / row[leading_index(row)]);
    }
    return order;
  }

  std::optional<Vec> solve_left(std::vector<Vec> const& a,
                                Vec const&              b,
                                Coord                   m) {
    std::size_t const k     = a.size();
    std::size_t const width = b.size();
    // Rows [A_i | e_i]; reducing [b | 0] over the A-columns leaves [0 | -x].
    std::vector<Vec> augmented;
    augmented.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      Vec row(width + k, 0);
      std::copy(a[i].begin(), a[i].end(), row.begin());
      row[width + i] = 1 % m;
      augmented.push_back(std::move(row));
    }
    auto howell = howell_form(std::move(augmented), width + k, m);
    Vec  v(width + k, 0);
    for (std::size_t j = 0; j < width; ++j) {
      v[j] = reduce(b[j], m);
    }
    for (auto const& row : howell) {
      std::size_t col = leading_index(row);
      if (col >= width) {
        break;
      }
      std::size_t lead = leading_index(v);
      if (lead < col) {
        return std::nullopt;
      }
      if (lead > col) {
        continue;
      }
      Coord p = row[col];
      if (v[col] % p != 0) {
        return std::nullopt;
      }
      add_multiple(v, row, m - v[col] / p, m);
    }
    for (std::size_t j = 0; j < width; ++j) {
      if (v[j] != 0) {
        return std::nullopt;
      }
    }
    Vec x(k);
    for (std::size_t i = 0; i < k; ++i) {
      x[i] = reduce(-v[width + i], m);
    }
    return x;
  }

  std::vector<Vec> intersect(std::vector<Vec> const& a,
                             std::vector<Vec> const& b,
                             std::size_t             width,
                             Coord                   m) {
    // Rows (x, x) for x in A and (y, 0) for y in B; vectors of the span with
    // vanishing first half are exactly (0, z) with z in A meet B.
    std::vector<Vec> rows;
    for (auto const& x : a) {
      Vec row(2 * width);
      std::copy(x.begin(), x.end(), row.begin());
      std::copy(x.begin(), x.end(), row.begin() + width);
      rows.push_back(std::move(row));
    }
    for (auto const& y : b) {
      Vec row(2 * width, 0);
      std::copy(y.begin(), y.end(), row.begin());
      rows.push_back(std::move(row));
    }
    auto             howell = howell_form(std::move(rows), 2 * width, m);
    std::vector<Vec> result;
    for (auto const& row : howell) {
      if (leading_index(row) >= width) {
        result.emplace_back(row.begin() + width, row.end());
      }
    }
    // Already in Howell form: the tail of a Howell basis is a Howell basis.
    return result;
  }

}  // namespace peirce::zmod
