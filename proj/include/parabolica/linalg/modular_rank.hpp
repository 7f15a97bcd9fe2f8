#pragma once

#include <cstdint>
#include <vector>

#include "parabolica/linalg/matrix.hpp"
#include "parabolica/simd/mod_kernels.hpp"

namespace parabolica {

/// Largest prime below 2^25.
inline constexpr std::uint32_t kDefaultPrime = 33554393u;

/// Reduces an exact matrix modulo p, row-major. Throws std::domain_error when
/// some denominator vanishes mod p.
std::vector<std::uint32_t> reduce_mod(const Matrix& m, std::uint32_t p);

/// Rank over Z/p. Always <= the rational rank, and equal for all but finitely
/// many p, which makes it a cheap independent cross-check of exact ranks.
std::size_t modular_rank(const Matrix& m, std::uint32_t p = kDefaultPrime,
                         const simd::ModKernels& kernels = simd::active_kernels());

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace parabolica
