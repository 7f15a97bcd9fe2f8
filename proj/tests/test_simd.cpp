#include <doctest.h>

#include <random>

#include "parabolica/linalg/modular_rank.hpp"
#include "parabolica/simd/mod_kernels.hpp"

using namespace parabolica;

namespace {

std::vector<std::uint32_t> random_residues(std::mt19937& rng, std::size_t n, std::uint32_t p) {
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar kernels match a direct reference") {
  const auto& k = simd::scalar_kernels();
  std::mt19937 rng(1);
  const std::uint32_t p = kDefaultPrime;
  auto dst = random_residues(rng, 37, p), src = random_residues(rng, 37, p);
  auto expected = dst;
  const std::uint32_t f = 123456;
  for (std::size_t i = 0; i < dst.size(); ++i)
    expected[i] = static_cast<std::uint32_t>((expected[i] + std::uint64_t{f} * src[i]) % p);
  k.axpy(dst.data(), src.data(), dst.size(), f, p);
  CHECK(dst == expected);
}

TEST_CASE("AVX2 kernels are bit-identical to scalar") {
  const simd::ModKernels* avx = simd::avx2_kernels();
  if (!avx) {
    MESSAGE("AVX2 variant unavailable on this host; skipping");
    return;
  }
  const auto& sc = simd::scalar_kernels();
  std::mt19937 rng(99);
  for (std::uint32_t p : {kDefaultPrime, 65521u, 3u, 2u, simd::kMaxModulus - 5u}) {
    for (std::size_t n : {0u, 1u, 3u, 7u, 8u, 9u, 15u, 16u, 17u, 64u, 101u}) {
      for (int trial = 0; trial < 5; ++trial) {
        const auto src = random_residues(rng, n, p);
        auto a = random_residues(rng, n, p);
        auto b = a;
        const std::uint32_t f = random_residues(rng, 1, p)[0];
        sc.axpy(a.data(), src.data(), n, f, p);
        avx->axpy(b.data(), src.data(), n, f, p);
        CHECK(a == b);
        sc.scale(a.data(), n, f, p);
        avx->scale(b.data(), n, f, p);
        CHECK(a == b);
      }
    }
    // extreme factors
    std::vector<std::uint32_t> src(19, p - 1), a(19, p - 1), b(19, p - 1);
    sc.axpy(a.data(), src.data(), 19, p - 1, p);
    avx->axpy(b.data(), src.data(), 19, p - 1, p);
    CHECK(a == b);
  }
}

TEST_CASE("modular rank is the same through every kernel variant") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = 3 + rng() % 30, c = 3 + rng() % 30;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    const std::size_t s = modular_rank(m, kDefaultPrime, simd::scalar_kernels());
    if (const auto* avx = simd::avx2_kernels()) CHECK(modular_rank(m, kDefaultPrime, *avx) == s);
    CHECK(modular_rank(m, kDefaultPrime, simd::active_kernels()) == s);
  }
}

TEST_CASE("isa names") {
  CHECK(std::string(simd::isa_name(simd::Isa::Scalar)) == "scalar");
  CHECK(std::string(simd::isa_name(simd::Isa::Avx2)) == "avx2");
}
