#include "grouprho/kernels.hpp"

namespace grouprho::kernels {

namespace {

void gather_sum(const std::uint64_t* src, std::uint64_t* dst, const std::int32_t* nbr,
                std::size_t count, std::size_t stride, std::size_t degree) {
  for (std::size_t v = 0; v < count; ++v) dst[v] = 0;
  for (std::size_t j = 0; j < degree; ++j) {
    const std::int32_t* row = nbr + j * stride;
    for (std::size_t v = 0; v < count; ++v) dst[v] += src[row[v]];
  }
}

void carry_step(std::uint64_t* plane, std::uint64_t* carry, std::size_t count) {
  for (std::size_t v = 0; v < count; ++v) {
    std::uint64_t x = plane[v] + carry[v];
    plane[v] = x & 0xFFFFFFFFu;
    carry[v] = x >> 32;
  }
}

void radial_step(const std::uint64_t* src, std::uint64_t* dst, const std::uint64_t* weight,
                 std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) dst[i] = src[i + 2] + weight[i] * src[i];
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet set{"scalar", gather_sum, carry_step, radial_step};
  return set;
}

}  // namespace grouprho::kernels
