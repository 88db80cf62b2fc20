#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace trikit {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;

/// Column-sparse integer matrix; each column sorted by row.
struct SparseColumns {
  using Entry = std::pair<std::size_t, std::int64_t>;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Entry>> columns;

  static SparseColumns from_dense(const IntMatrix& m);
  IntMatrix to_dense() const;
  SparseColumns transposed() const;
  std::size_t nonzeros() const;
};

struct SnfResult {
  /// Positive invariant factors d_1 | d_2 | ... | d_r.
  std::vector<BigInt> invariant_factors;
  /// Set when the machine-word pass overflowed and arbitrary precision was used.
  bool used_bigint = false;

  std::size_t rank() const noexcept { return invariant_factors.size(); }
  /// Invariant factors greater than one.
  std::vector<BigInt> torsion() const;
};

/// Matrices wider than this take the sparse unit-pivot route.
inline constexpr std::size_t kDenseColumnLimit = 5000;

/// Invariant factors of an integer matrix. Pivots are chosen by smallest
/// absolute value, ties broken by (row, column). Runs in int64 with overflow
/// detection and reruns in arbitrary precision on overflow.
SnfResult smith_normal_form(const IntMatrix& m);
SnfResult smith_normal_form(const SparseColumns& m);

/// Eliminates ±1 pivots in sparse form, then diagonalizes the remaining
/// core densely. Exposed for testing; smith_normal_form() picks it for wide
/// matrices.
SnfResult smith_normal_form_sparse(const SparseColumns& m);

/// Same, forced through arbitrary precision (used to test the fallback).
SnfResult smith_normal_form_bigint(const IntMatrix& m);

/// Rank over ℤ/p by column reduction. p must be prime.
std::size_t rank_mod_p(const SparseColumns& m, std::uint32_t p);

bool is_prime(std::uint64_t n);

/// Replaces a list of nonzero diagonal entries by the equivalent divisibility
/// chain (gcd/lcm exchange), all positive.
std::vector<BigInt> normalize_diagonal(std::vector<BigInt> diagonal);

}  // namespace trikit
