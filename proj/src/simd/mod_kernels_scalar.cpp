#include "parabolica/simd/mod_kernels.hpp"

namespace parabolica::simd::detail {

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t factor,
                 std::uint32_t p) {
  const std::uint64_t f = factor;
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + f * src[i]) % p);
}

void scale_scalar(std::uint32_t* row, std::size_t n, std::uint32_t factor, std::uint32_t p) {
  const std::uint64_t f = factor;
  for (std::size_t i = 0; i < n; ++i) row[i] = static_cast<std::uint32_t>((f * row[i]) % p);
}

}  // namespace parabolica::simd::detail
