#include <cstdlib>
#include <string>

#include "grouprho/kernels.hpp"

namespace grouprho::kernels {

#if defined(GROUPRHO_HAVE_AVX2)
const KernelSet* avx2_kernels_unchecked();
#endif
#if defined(GROUPRHO_HAVE_NEON)
const KernelSet* neon_kernels_unchecked();
#endif

const KernelSet* avx2_kernels() {
#if defined(GROUPRHO_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? avx2_kernels_unchecked() : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet* neon_kernels() {
#if defined(GROUPRHO_HAVE_NEON)
  // Advanced SIMD is mandatory on AArch64.
  return neon_kernels_unchecked();
#else
  return nullptr;
#endif
}

const KernelSet& active_kernels() {
  static const KernelSet* chosen = [] {
    const char* env = std::getenv("GROUPRHO_KERNELS");
    std::string want = env ? env : "";
    if (want == "scalar") return &scalar_kernels();
    if (want == "avx2") return avx2_kernels() ? avx2_kernels() : &scalar_kernels();
    if (want == "neon") return neon_kernels() ? neon_kernels() : &scalar_kernels();
    if (const KernelSet* k = avx2_kernels()) return k;
    if (const KernelSet* k = neon_kernels()) return k;
    return &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace grouprho::kernels
