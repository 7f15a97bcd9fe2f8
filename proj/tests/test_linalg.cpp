#include <doctest.h>

#include <random>

#include "parabolica/linalg/matrix.hpp"
#include "parabolica/linalg/modular_rank.hpp"
#include "parabolica/linalg/sparse_matrix.hpp"

using namespace parabolica;

namespace {

Matrix from_rows(const std::vector<std::vector<long>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

Matrix random_integer(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
  CHECK(rank(from_rows({{0, 0}, {0, 0}})) == 0);
  CHECK(rank(Matrix::identity(5)) == 5);
  CHECK(rank(Matrix(0, 3)) == 0);
}

TEST_CASE("rank with rational entries") {
  Matrix m = from_rows({{1, 1}, {1, 1}});
  m(1, 1) = Rational(3, 2);
  CHECK(rank(m) == 2);
  m(1, 0) = Rational(2, 3);
  m(1, 1) = Rational(2, 3);
  CHECK(rank(m) == 1);
}

TEST_CASE("kernel basis spans the null space") {
  const Matrix m = from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  const Matrix k = kernel_basis(m);
  REQUIRE(k.cols() == 1);
  CHECK((m * k).is_zero());
  CHECK(k(0, 0) == 1);
  CHECK(k(1, 0) == -2);
  CHECK(k(2, 0) == 1);
}

TEST_CASE("row reduction pivots on the first nonzero column entry") {
  const Echelon e = row_reduce(from_rows({{0, 2, 4}, {1, 1, 1}}));
  REQUIRE(e.pivots.size() == 2);
  CHECK(e.pivots[0] == 0);
  CHECK(e.pivots[1] == 1);
  CHECK(e.reduced(0, 2) == -1);
  CHECK(e.reduced(1, 2) == 2);
}

TEST_CASE("inverse and solve") {
  const Matrix m = from_rows({{2, 1}, {5, 3}});
  const Matrix inv = inverse(m);
  CHECK(m * inv == Matrix::identity(2));
  CHECK(inv(0, 0) == 3);
  CHECK(inv(0, 1) == -1);
  CHECK_THROWS_AS(inverse(from_rows({{1, 2}, {2, 4}})), std::domain_error);
  CHECK(inverse(Matrix(0, 0)).rows() == 0);

  const auto x = solve(m, from_rows({{1}, {2}}));
  REQUIRE(x.has_value());
  CHECK(m * *x == from_rows({{1}, {2}}));
  CHECK_FALSE(solve(from_rows({{1, 1}, {1, 1}}), from_rows({{1}, {2}})).has_value());
}

TEST_CASE("column spans") {
  const Matrix a = from_rows({{1, 0}, {0, 1}, {0, 0}});
  const Matrix b = from_rows({{1, 1}, {1, -1}, {0, 0}});
  CHECK(same_column_span(a, b));
  CHECK_FALSE(same_column_span(a, from_rows({{1}, {0}, {0}})));
  CHECK(column_space_basis(from_rows({{1, 2, 0}, {2, 4, 1}})).cols() == 2);
}

TEST_CASE("sparse matrices agree with dense arithmetic") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = random_integer(rng, 6, 6, -2, 2), b = random_integer(rng, 6, 6, -2, 2);
    const SparseMatrix sa = SparseMatrix::from_dense(a), sb = SparseMatrix::from_dense(b);
    CHECK((sa * sb).to_dense() == a * b);
    CHECK((sa + sb).to_dense() == a + b);
    CHECK((sa - sb).to_dense() == a - b);
    CHECK(commutator(sa, sb).to_dense() == a * b - b * a);
    Vector v(6);
    for (std::size_t i = 0; i < 6; ++i) v[i] = static_cast<long>(i) - 2;
    CHECK(sa.apply(v) == a * v);
  }
}

TEST_CASE("modular rank matches the exact rank on random integer matrices") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
    Matrix m = random_integer(rng, r, c, -3, 3);
    // force a dependency now and then
    if (trial % 3 == 0 && r > 2)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2 - m(1, j);
    CHECK(modular_rank(m) == rank(m));
  }
}

TEST_CASE("modular rank handles denominators") {
  Matrix m = from_rows({{1, 1}, {1, 1}});
  m(0, 1) = Rational(1, 3);
  m(1, 1) = Rational(1, 3);
  CHECK(modular_rank(m) == 1);
  CHECK(inverse_mod(3, kDefaultPrime) * 3ull % kDefaultPrime == 1);
}
