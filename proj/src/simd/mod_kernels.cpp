#include "parabolica/simd/mod_kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace parabolica::simd {

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

const ModKernels& scalar_kernels() {
  static const ModKernels k{Isa::Scalar, &detail::axpy_scalar, &detail::scale_scalar};
  return k;
}

const ModKernels* avx2_kernels() {
#if defined(PARABOLICA_HAVE_AVX2_TU)
  static const bool supported = __builtin_cpu_supports("avx2");
  static const ModKernels k{Isa::Avx2, &detail::axpy_avx2, &detail::scale_avx2};
  return supported ? &k : nullptr;
#else
  return nullptr;
#endif
}

const ModKernels& active_kernels() {
  static const ModKernels* chosen = [] {
    const char* env = std::getenv("PARABOLICA_SIMD");
    if (env && std::string_view(env) == "scalar") return &scalar_kernels();
    if (const auto* k = avx2_kernels()) return k;
    return &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace parabolica::simd
