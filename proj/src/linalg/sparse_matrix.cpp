#include "parabolica/linalg/sparse_matrix.hpp"

#include <map>
#include <stdexcept>

namespace parabolica {

namespace {

std::vector<SparseMatrix::Entry> merge(const std::vector<SparseMatrix::Entry>& a,
                                       const std::vector<SparseMatrix::Entry>& b,
                                       const Rational& sb) {
  std::vector<SparseMatrix::Entry> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sb * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second + sb * b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (sgn(m(r, c)) != 0) s.columns_[c].emplace_back(r, m(r, c));
  return s;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

void SparseMatrix::set_column(std::size_t c, std::vector<Entry> entries) {
  columns_.at(c) = std::move(entries);
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrix::add");
  if (sgn(value) == 0) return;
  columns_[c] = merge(columns_[c], {{r, value}}, 1);
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  for (const auto& [row, v] : columns_.at(c))
    if (row == r) return v;
  return 0;
}

Vector SparseMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("SparseMatrix::apply: shape mismatch");
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(v[c]) == 0) continue;
    for (const auto& [r, a] : columns_[c]) out[r] += a * v[c];
  }
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("SparseMatrix product: shape mismatch");
  SparseMatrix out(rows_, rhs.cols_);
  for (std::size_t c = 0; c < rhs.cols_; ++c) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [k, b] : rhs.columns_[c])
      for (const auto& [r, a] : columns_[k]) acc[r] += a * b;
    auto& col = out.columns_[c];
    for (auto& [r, v] : acc)
      if (sgn(v) != 0) col.emplace_back(r, std::move(v));
  }
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("SparseMatrix sum: shape mismatch");
  SparseMatrix out(rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.columns_[c] = merge(columns_[c], rhs.columns_[c], 1);
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("SparseMatrix difference: shape mismatch");
  SparseMatrix out(rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.columns_[c] = merge(columns_[c], rhs.columns_[c], -1);
  return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& s) const {
  if (sgn(s) == 0) return SparseMatrix(rows_, cols_);
  SparseMatrix out = *this;
  for (auto& col : out.columns_)
    for (auto& e : col) e.second *= s;
  return out;
}

bool SparseMatrix::operator==(const SparseMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && columns_ == rhs.columns_;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, v] : columns_[c]) m(r, c) = v;
  return m;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

}  // namespace parabolica
