#pragma once

#include <cstddef>
#include <cstdint>

// Limb-sliced big counters: an array of counters is stored as planes of
// 64-bit lanes, plane l holding 32-bit limb l of every counter. Lanes may
// exceed 32 bits between a sum and the following carry pass.
namespace grouprho::kernels {

struct KernelSet {
  const char* name;

  // dst[v] = sum_{j < degree} src[nbr[j * stride + v]] for v < count.
  // Neighbour indices may point at a sentinel lane holding zero.
  void (*gather_sum)(const std::uint64_t* src, std::uint64_t* dst, const std::int32_t* nbr,
                     std::size_t count, std::size_t stride, std::size_t degree);

  // x = plane[v] + carry[v]; plane[v] = x mod 2^32; carry[v] = x >> 32.
  void (*carry_step)(std::uint64_t* plane, std::uint64_t* carry, std::size_t count);

  // dst[i] = src[i + 2] + weight[i] * src[i] for i < count, with src lanes
  // below 2^32 and weights below 2^16. Used with a zero-padded source so
  // that index i+1 of the padded array is entry i.
  void (*radial_step)(const std::uint64_t* src, std::uint64_t* dst, const std::uint64_t* weight,
                      std::size_t count);
};

const KernelSet& scalar_kernels();
// nullptr when not compiled in or not supported by the running CPU.
const KernelSet* avx2_kernels();
const KernelSet* neon_kernels();

// Best available set. GROUPRHO_KERNELS=scalar|avx2|neon forces a choice
// (an unavailable request falls back to scalar).
const KernelSet& active_kernels();

}  // namespace grouprho::kernels
