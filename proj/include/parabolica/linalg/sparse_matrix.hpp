#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "parabolica/linalg/matrix.hpp"

namespace parabolica {

/// Column-compressed exact matrix. Module action matrices are weight-block
/// sparse, so products and commutators stay cheap even for adjoint-sized
/// modules of the exceptional algebras.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Rational>;  // (row, value), rows increasing

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

  static SparseMatrix from_dense(const Matrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  const std::vector<Entry>& column(std::size_t c) const { return columns_[c]; }
  /// Overwrites column c; entries must have increasing rows and nonzero values.
  void set_column(std::size_t c, std::vector<Entry> entries);
  /// Adds value at (r, c).
  void add(std::size_t r, std::size_t c, const Rational& value);
  Rational at(std::size_t r, std::size_t c) const;

  Vector apply(const Vector& v) const;
  SparseMatrix operator*(const SparseMatrix& rhs) const;
  SparseMatrix operator+(const SparseMatrix& rhs) const;
  SparseMatrix operator-(const SparseMatrix& rhs) const;
  SparseMatrix scaled(const Rational& s) const;
  bool is_zero() const { return nonzeros() == 0; }
  bool operator==(const SparseMatrix& rhs) const;

  Matrix to_dense() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

/// [a, b] = ab - ba
SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace parabolica
