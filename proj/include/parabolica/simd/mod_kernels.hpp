#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

// Row kernels for Gaussian elimination over Z/p. Every variant must produce
// bit-identical results to the scalar reference; the test suite checks this
// on random inputs for each variant the host can run.
//
// Residues are stored as uint32 in [0, p) with p < 2^26, so a product plus
// an addend stays below 2^53 and is exact in double precision. The vector
// variants rely on that to reduce with a floating-point quotient estimate.

namespace parabolica::simd {

inline constexpr std::uint32_t kMaxModulus = 1u << 26;

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa);

struct ModKernels {
  Isa isa;
  /// dst[i] = (dst[i] + factor * src[i]) mod p
  void (*axpy)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t factor,
               std::uint32_t p);
  /// row[i] = (factor * row[i]) mod p
  void (*scale)(std::uint32_t* row, std::size_t n, std::uint32_t factor, std::uint32_t p);
};

const ModKernels& scalar_kernels();

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const ModKernels* avx2_kernels();

/// Best variant for this host. PARABOLICA_SIMD=scalar forces the reference path.
const ModKernels& active_kernels();

// Convenience wrappers over a kernel set.
inline void row_axpy(const ModKernels& k, std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
                     std::uint32_t factor, std::uint32_t p) {
  k.axpy(dst.data(), src.data(), dst.size(), factor, p);
}
inline void row_scale(const ModKernels& k, std::span<std::uint32_t> row, std::uint32_t factor, std::uint32_t p) {
  k.scale(row.data(), row.size(), factor, p);
}

namespace detail {
void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t factor,
                 std::uint32_t p);
void scale_scalar(std::uint32_t* row, std::size_t n, std::uint32_t factor, std::uint32_t p);
#if defined(PARABOLICA_HAVE_AVX2_TU)
void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t factor,
               std::uint32_t p);
void scale_avx2(std::uint32_t* row, std::size_t n, std::uint32_t factor, std::uint32_t p);
#endif
}  // namespace detail

}  // namespace parabolica::simd
