#include "trikit/smith.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

namespace trikit {

namespace {

struct Overflow {};

// int64 that throws Overflow instead of wrapping.
struct Checked {
  std::int64_t v = 0;

  Checked() = default;
  Checked(std::int64_t x) : v(x) {}  // NOLINT(google-explicit-constructor)

  friend Checked operator*(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend Checked operator/(Checked a, Checked b) {
    if (a.v == std::numeric_limits<std::int64_t>::min() && b.v == -1) throw Overflow{};
    return a.v / b.v;
  }
  Checked& operator-=(Checked o) { return *this = *this - o; }
  friend auto operator<=>(Checked, Checked) = default;
  friend bool operator==(Checked, Checked) = default;
};

Checked abs_value(Checked x) {
  if (x.v == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return x.v < 0 ? -x.v : x.v;
}
BigInt abs_value(const BigInt& x) { return boost::multiprecision::abs(x); }

bool is_zero(Checked x) { return x.v == 0; }
bool is_zero(const BigInt& x) { return x.is_zero(); }
bool is_unit(Checked x) { return x.v == 1 || x.v == -1; }
bool is_unit(const BigInt& x) { return x == 1 || x == -1; }

BigInt to_big(Checked x) { return BigInt(x.v); }
BigInt to_big(const BigInt& x) { return x; }

template <typename T>
void swap_rows(Matrix<T>& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
}

template <typename T>
void swap_cols(Matrix<T>& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, c1), a(r, c2));
}

// Reduces a to diagonal form by unimodular row/column operations and returns
// the absolute values of the nonzero diagonal entries, in elimination order.
template <typename T>
std::vector<T> diagonalize(Matrix<T> a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<T> diag;
  // Rows below the pivot that are known to be zero; elimination never
  // touches them again.
  std::vector<char> zero_row(m, 0);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero |entry|, first in (row, column) order.
    bool found = false;
    std::size_t pr = t, pc = t;
    T best{};
    for (std::size_t i = t; i < m && !(found && is_unit(best)); ++i) {
      if (zero_row[i]) continue;
      bool any = false;
      for (std::size_t j = t; j < n; ++j) {
        if (is_zero(a(i, j))) continue;
        any = true;
        T v = abs_value(a(i, j));
        if (!found || v < best) {
          best = v;
          pr = i;
          pc = j;
          found = true;
          if (is_unit(best)) break;
        }
      }
      if (!any) zero_row[i] = 1;
    }
    if (!found) break;
    std::swap(zero_row[t], zero_row[pr]);
    swap_rows(a, t, pr);
    swap_cols(a, t, pc);

    while (true) {
      bool leftover = false;
      std::vector<std::size_t> support;
      for (std::size_t j = t; j < n; ++j)
        if (!is_zero(a(t, j))) support.push_back(j);
      for (std::size_t i = t + 1; i < m; ++i) {
        if (is_zero(a(i, t))) continue;
        T q = a(i, t) / a(t, t);
        if (!is_zero(q))
          for (std::size_t j : support) a(i, j) -= q * a(t, j);
        if (!is_zero(a(i, t))) leftover = true;
      }
      if (leftover) {
        std::size_t best_i = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (!is_zero(a(i, t)) &&
              (best_i == t || abs_value(a(i, t)) < abs_value(a(best_i, t))))
            best_i = i;
        swap_rows(a, t, best_i);
        continue;
      }

      // Column t is clear below the pivot, so column operations only touch
      // row t.
      for (std::size_t j = t + 1; j < n; ++j) {
        if (is_zero(a(t, j))) continue;
        T q = a(t, j) / a(t, t);
        a(t, j) -= q * a(t, t);
        if (!is_zero(a(t, j))) leftover = true;
      }
      if (leftover) {
        std::size_t best_j = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (!is_zero(a(t, j)) &&
              (best_j == t || abs_value(a(t, j)) < abs_value(a(t, best_j))))
            best_j = j;
        swap_cols(a, t, best_j);
        continue;
      }
      break;
    }
    diag.push_back(abs_value(a(t, t)));
  }
  return diag;
}

template <typename T>
SnfResult finish(const std::vector<T>& diag, std::size_t extra_units, bool big) {
  std::vector<BigInt> d;
  d.reserve(diag.size() + extra_units);
  for (std::size_t i = 0; i < extra_units; ++i) d.emplace_back(1);
  for (const auto& x : diag) d.push_back(to_big(x));
  SnfResult r;
  r.invariant_factors = normalize_diagonal(std::move(d));
  r.used_bigint = big;
  return r;
}

template <typename T>
Matrix<T> convert(const IntMatrix& m) {
  Matrix<T> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = T(m(r, c));
  return out;
}

template <typename T>
SnfResult sparse_impl(const SparseColumns& src, bool big) {
  std::vector<std::map<std::size_t, T>> rows(src.rows);
  std::vector<std::set<std::size_t>> cols(src.cols);
  for (std::size_t c = 0; c < src.cols; ++c)
    for (const auto& [r, v] : src.columns[c])
      if (v != 0) {
        rows[r][c] = T(v);
        cols[c].insert(r);
      }

  std::size_t units = 0;
  std::vector<bool> col_alive(src.cols, true);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t c = 0; c < src.cols; ++c) {
      if (!col_alive[c] || cols[c].empty()) continue;
      std::size_t pivot_row = 0;
      bool found = false;
      for (std::size_t r : cols[c])
        if (is_unit(rows[r].at(c)) && (!found || rows[r].size() < rows[pivot_row].size())) {
          pivot_row = r;
          found = true;
        }
      if (!found) continue;

      const T p = rows[pivot_row].at(c);
      const auto pivot_entries = rows[pivot_row];
      std::vector<std::size_t> targets(cols[c].begin(), cols[c].end());
      for (std::size_t i : targets) {
        if (i == pivot_row) continue;
        const T factor = rows[i].at(c) * p;  // p = ±1, so this is a(i,c)/p
        for (const auto& [j, val] : pivot_entries) {
          auto it = rows[i].find(j);
          T updated = (it == rows[i].end() ? T(0) : it->second) - factor * val;
          if (is_zero(updated)) {
            if (it != rows[i].end()) rows[i].erase(it);
            cols[j].erase(i);
          } else {
            rows[i][j] = updated;
            cols[j].insert(i);
          }
        }
      }
      for (const auto& [j, val] : pivot_entries) cols[j].erase(pivot_row);
      rows[pivot_row].clear();
      cols[c].clear();
      col_alive[c] = false;
      ++units;
      progress = true;
    }
  }

  std::vector<std::size_t> live_rows, live_cols;
  for (std::size_t r = 0; r < src.rows; ++r)
    if (!rows[r].empty()) live_rows.push_back(r);
  for (std::size_t c = 0; c < src.cols; ++c)
    if (!cols[c].empty()) live_cols.push_back(c);
  std::unordered_map<std::size_t, std::size_t> col_pos;
  for (std::size_t j = 0; j < live_cols.size(); ++j) col_pos[live_cols[j]] = j;
  Matrix<T> core(live_rows.size(), live_cols.size());
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (const auto& [j, v] : rows[live_rows[i]]) core(i, col_pos.at(j)) = v;
  return finish(diagonalize(std::move(core)), units, big);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t r = 1;
  base %= p;
  while (exp) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

}  // namespace

// ------------------------------------------------------------ SparseColumns

SparseColumns SparseColumns::from_dense(const IntMatrix& m) {
  SparseColumns s;
  s.rows = m.rows();
  s.cols = m.cols();
  s.columns.resize(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m(r, c) != 0) s.columns[c].emplace_back(r, m(r, c));
  return s;
}

IntMatrix SparseColumns::to_dense() const {
  IntMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [r, v] : columns[c]) m(r, c) = v;
  return m;
}

SparseColumns SparseColumns::transposed() const {
  SparseColumns t;
  t.rows = cols;
  t.cols = rows;
  t.columns.resize(rows);
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [r, v] : columns[c]) t.columns[r].emplace_back(c, v);
  return t;
}

std::size_t SparseColumns::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

// ------------------------------------------------------------------- SNF

std::vector<BigInt> SnfResult::torsion() const {
  std::vector<BigInt> out;
  for (const auto& d : invariant_factors)
    if (d > 1) out.push_back(d);
  return out;
}

std::vector<BigInt> normalize_diagonal(std::vector<BigInt> diagonal) {
  std::vector<BigInt> units;
  std::vector<BigInt> rest;
  for (auto& d : diagonal) {
    if (d.is_zero()) continue;
    d = boost::multiprecision::abs(d);
    if (d == 1) units.push_back(d); else rest.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      BigInt g = boost::multiprecision::gcd(rest[i], rest[j]);
      if (g == rest[i]) continue;
      BigInt l = rest[i] / g * rest[j];
      rest[i] = g;
      rest[j] = l;
    }
  for (auto& d : rest)
    if (d == 1) units.push_back(d);
  rest.erase(std::remove(rest.begin(), rest.end(), BigInt(1)), rest.end());
  units.insert(units.end(), rest.begin(), rest.end());
  return units;
}

SnfResult smith_normal_form(const IntMatrix& m) {
  try {
    return finish(diagonalize(convert<Checked>(m)), 0, false);
  } catch (const Overflow&) {
    return smith_normal_form_bigint(m);
  }
}

SnfResult smith_normal_form_bigint(const IntMatrix& m) {
  return finish(diagonalize(convert<BigInt>(m)), 0, true);
}

SnfResult smith_normal_form_sparse(const SparseColumns& m) {
  try {
    return sparse_impl<Checked>(m, false);
  } catch (const Overflow&) {
    return sparse_impl<BigInt>(m, true);
  }
}

SnfResult smith_normal_form(const SparseColumns& m) {
  if (m.cols > kDenseColumnLimit) return smith_normal_form_sparse(m);
  return smith_normal_form(m.to_dense());
}

// ---------------------------------------------------------------- mod p

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::size_t rank_mod_p(const SparseColumns& m, std::uint32_t p) {
  using Col = std::vector<std::pair<std::size_t, std::uint64_t>>;
  std::unordered_map<std::size_t, Col> pivots;  // lowest row -> reduced column
  std::size_t rank = 0;

  for (const auto& raw : m.columns) {
    Col col;
    for (const auto& [r, v] : raw) {
      auto x = static_cast<std::int64_t>(v % static_cast<std::int64_t>(p));
      if (x < 0) x += p;
      if (x != 0) col.emplace_back(r, static_cast<std::uint64_t>(x));
    }
    while (!col.empty()) {
      auto it = pivots.find(col.back().first);
      if (it == pivots.end()) {
        pivots.emplace(col.back().first, std::move(col));
        ++rank;
        break;
      }
      const Col& piv = it->second;
      std::uint64_t factor = col.back().second * pow_mod(piv.back().second, p - 2, p) % p;
      Col merged;
      merged.reserve(col.size() + piv.size());
      std::size_t a = 0, b = 0;
      while (a < col.size() || b < piv.size()) {
        if (b == piv.size() || (a < col.size() && col[a].first < piv[b].first)) {
          merged.push_back(col[a++]);
        } else if (a == col.size() || piv[b].first < col[a].first) {
          merged.emplace_back(piv[b].first, (p - factor * piv[b].second % p) % p);
          ++b;
        } else {
          std::uint64_t v = (col[a].second + p - factor * piv[b].second % p) % p;
          if (v != 0) merged.emplace_back(col[a].first, v);
          ++a;
          ++b;
        }
      }
      col = std::move(merged);
    }
  }
  return rank;
}

}  // namespace trikit
