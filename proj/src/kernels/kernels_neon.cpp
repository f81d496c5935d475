#include <arm_neon.h>

#include "grouprho/kernels.hpp"

namespace grouprho::kernels {

namespace {

void gather_sum(const std::uint64_t* src, std::uint64_t* dst, const std::int32_t* nbr,
                std::size_t count, std::size_t stride, std::size_t degree) {
  // NEON has no gather; the win comes from vectorised accumulation.
  std::size_t v = 0;
  for (; v + 2 <= count; v += 2) {
    uint64x2_t acc = vdupq_n_u64(0);
    for (std::size_t j = 0; j < degree; ++j) {
      const std::int32_t* row = nbr + j * stride + v;
      uint64x2_t g = vcombine_u64(vcreate_u64(src[row[0]]), vcreate_u64(src[row[1]]));
      acc = vaddq_u64(acc, g);
    }
    vst1q_u64(dst + v, acc);
  }
  for (; v < count; ++v) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < degree; ++j) s += src[nbr[j * stride + v]];
    dst[v] = s;
  }
}

void carry_step(std::uint64_t* plane, std::uint64_t* carry, std::size_t count) {
  const uint64x2_t mask = vdupq_n_u64(0xFFFFFFFFu);
  std::size_t v = 0;
  for (; v + 2 <= count; v += 2) {
    uint64x2_t x = vaddq_u64(vld1q_u64(plane + v), vld1q_u64(carry + v));
    vst1q_u64(plane + v, vandq_u64(x, mask));
    vst1q_u64(carry + v, vshrq_n_u64(x, 32));
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
  for (; i + 2 <= count; i += 2) {
    uint32x2_t lo = vmovn_u64(vld1q_u64(src + i));
    uint32x2_t w = vmovn_u64(vld1q_u64(weight + i));
    uint64x2_t r = vmlal_u32(vld1q_u64(src + i + 2), w, lo);
    vst1q_u64(dst + i, r);
  }
  for (; i < count; ++i) dst[i] = src[i + 2] + weight[i] * src[i];
}

}  // namespace

const KernelSet* neon_kernels_unchecked() {
  static const KernelSet set{"neon", gather_sum, carry_step, radial_step};
  return &set;
}

}  // namespace grouprho::kernels
