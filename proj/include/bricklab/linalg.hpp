#pragma once

// Exact rational linear algebra: dense matrices, sparse Gauss-Jordan
// elimination, kernels, solving and a few polynomial helpers.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bricklab {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "3", "-3/2", "0.25" or "−3/2" (U+2212 minus). Throws ParseError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);
  static Matrix column(const std::vector<Rational>& v);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  [[nodiscard]] Matrix select_columns(const std::vector<std::size_t>& cols) const;
  [[nodiscard]] std::vector<Rational> column_vector(std::size_t c) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator*=(const Rational& s);
  bool operator==(const Matrix& rhs) const;

  [[nodiscard]] Rational trace() const;
  [[nodiscard]] std::size_t nonzeros() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const std::vector<Matrix>& blocks);

/// Sparse row: (column, value) pairs sorted by column, no explicit zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

struct Echelon {
  std::vector<SparseRow> rows;       // fully reduced, pivot entry 1
  std::vector<std::size_t> pivots;   // pivot column of rows[k]
  std::vector<SparseRow> leftover;   // rows that received no pivot
};

/// Gauss-Jordan elimination on sparse rows. Only columns < pivot_limit may
/// become pivots; when natural_order is false columns are visited sparsest
/// first to limit fill-in.
Echelon sparse_rref(std::vector<SparseRow> rows, std::size_t ncols, bool natural_order = false,
                    std::size_t pivot_limit = SIZE_MAX);

std::vector<SparseRow> to_sparse_rows(const Matrix& m);

/// Kernel basis of the system given by sparse rows, one dense vector per basis element.
std::vector<std::vector<Rational>> sparse_nullspace(std::vector<SparseRow> rows, std::size_t ncols);

/// Kernel of m, basis vectors as columns.
Matrix nullspace(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Pivot rows of the natural-order RREF (row space basis, reduced).
Echelon row_echelon(const Matrix& m);

/// A basis of the column space chosen among the columns of m.
Matrix column_space(const Matrix& m);

/// Some X with a * X = b, or nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);
Rational determinant(Matrix m);

/// Columns extending the independent columns of `sub` (rows x k) to a basis of Q^rows,
/// taken from the standard basis.
Matrix complement_columns(const Matrix& sub);

/// Characteristic polynomial coefficients c_0..c_n (monic, c_n = 1).
std::vector<Rational> charpoly(const Matrix& m);

/// Rational roots of a polynomial with rational coefficients (ascending order of
/// coefficients). Roots whose search would need factoring an integer above the
/// bound are skipped.
std::vector<Rational> rational_roots(const std::vector<Rational>& poly, const Integer& factor_bound);

Rational eval_poly(const std::vector<Rational>& poly, const Rational& x);

/// Smallest-denominator rational in the closed interval [lo, hi].
Rational simplest_between(Rational lo, Rational hi);

/// Scales a nonzero rational vector to a primitive integer vector whose first
/// nonzero entry is positive.
std::vector<Integer> primitive_integer(const std::vector<Rational>& v);

}  // namespace bricklab
