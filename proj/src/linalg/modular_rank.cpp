#include "parabolica/linalg/modular_rank.hpp"

#include <span>
#include <stdexcept>

namespace parabolica {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::domain_error("inverse_mod: not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::vector<std::uint32_t> reduce_mod(const Matrix& m, std::uint32_t p) {
  if (p < 2 || p >= simd::kMaxModulus) throw std::invalid_argument("reduce_mod: modulus out of range");
  std::vector<std::uint32_t> out(m.rows() * m.cols());
  const BigInt mod = p;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      if (sgn(q) == 0) continue;
      BigInt num = q.get_num() % mod;
      if (num < 0) num += mod;
      const BigInt den = q.get_den() % mod;
      if (den == 0) throw std::domain_error("reduce_mod: denominator divisible by p");
      const std::uint64_t n = num.get_ui();
      const std::uint64_t d = inverse_mod(static_cast<std::uint32_t>(den.get_ui()), p);
      out[i * m.cols() + j] = static_cast<std::uint32_t>((n * d) % p);
    }
  }
  return out;
}

std::size_t modular_rank(const Matrix& m, std::uint32_t p, const simd::ModKernels& kernels) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint32_t> a = reduce_mod(m, p);
  auto row = [&](std::size_t r) { return std::span<std::uint32_t>(a.data() + r * cols, cols); };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) std::swap_ranges(row(piv).begin(), row(piv).end(), row(rank).begin());
    simd::row_scale(kernels, row(rank), inverse_mod(a[rank * cols + c], p), p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint32_t x = a[r * cols + c];
      if (x == 0) continue;
      simd::row_axpy(kernels, row(r), row(rank), p - x, p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace parabolica
