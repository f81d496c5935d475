// Built with -mavx2; only called after a runtime CPU check.
#include <immintrin.h>

#include "grouprho/kernels.hpp"

namespace grouprho::kernels {

namespace {

void gather_sum(const std::uint64_t* src, std::uint64_t* dst, const std::int32_t* nbr,
                std::size_t count, std::size_t stride, std::size_t degree) {
  const long long* base = reinterpret_cast<const long long*>(src);
  std::size_t v = 0;
  for (; v + 4 <= count; v += 4) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t j = 0; j < degree; ++j) {
      __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(nbr + j * stride + v));
      acc = _mm256_add_epi64(acc, _mm256_i32gather_epi64(base, idx, 8));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + v), acc);
  }
  for (; v < count; ++v) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < degree; ++j) s += src[nbr[j * stride + v]];
    dst[v] = s;
  }
}

void carry_step(std::uint64_t* plane, std::uint64_t* carry, std::size_t count) {
  const __m256i mask = _mm256_set1_epi64x(0xFFFFFFFFll);
  std::size_t v = 0;
  for (; v + 4 <= count; v += 4) {
    __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(plane + v));
    __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(carry + v));
    __m256i x = _mm256_add_epi64(p, c);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(plane + v), _mm256_and_si256(x, mask));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(carry + v), _mm256_srli_epi64(x, 32));
  }
  for (; v < count; ++v) {
    std::uint64_t x = plane[v] + carry[v];
    plane[v] = x & 0xFFFFFFFFu;
    carry[v] = x >> 32;
  }
}

void radial_step(const std::uint64_t* src, std::uint64_t* dst, const std::uint64_t* weight,
                 std::size_t count) {
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + 2));
    __m256i w = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(weight + i));
    __m256i r = _mm256_add_epi64(hi, _mm256_mul_epu32(w, lo));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
  }
  for (; i < count; ++i) dst[i] = src[i + 2] + weight[i] * src[i];
}

}  // namespace

const KernelSet* avx2_kernels_unchecked() {
  static const KernelSet set{"avx2", gather_sum, carry_step, radial_step};
  return &set;
}

}  // namespace grouprho::kernels
