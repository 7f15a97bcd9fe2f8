#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "parabolica/linalg/rational.hpp"

namespace parabolica {

/// Dense row-major matrix over exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix scaled(const Rational& s) const;
  Matrix transpose() const;

  bool is_zero() const;
  bool operator==(const Matrix& rhs) const;

  Matrix select_rows(const std::vector<std::size_t>& rows) const;
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  /// Restriction to a block of rows and columns.
  Matrix block(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  Matrix reduced;                    // reduced row echelon form (zero rows trimmed)
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan over the rationals; the pivot in each column is the first
/// nonzero entry in the fixed row order.
Echelon row_reduce(const Matrix& m);

/// Rank by fraction-free (Bareiss) elimination after clearing row denominators.
std::size_t rank(const Matrix& m);

/// Basis of the null space, one column per free variable.
Matrix kernel_basis(const Matrix& m);

/// The pivot columns of `m` itself (a basis of its column space drawn from its columns).
Matrix column_space_basis(const Matrix& m);

/// Solves a * x = b for every column of b. Returns nullopt when inconsistent.
/// When a has a kernel the particular solution with free variables zero is returned.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

/// True iff the column spans of a and b coincide.
bool same_column_span(const Matrix& a, const Matrix& b);

}  // namespace parabolica
