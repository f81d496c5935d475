#include <doctest.h>

#include <random>
#include <vector>

#include "grouprho/kernels.hpp"

using namespace grouprho::kernels;

namespace {

std::vector<const KernelSet*> vector_sets() {
  std::vector<const KernelSet*> out;
  if (avx2_kernels()) out.push_back(avx2_kernels());
  if (neon_kernels()) out.push_back(neon_kernels());
  return out;
}

}  // namespace

TEST_CASE("vector kernels agree with the scalar kernels") {
  const KernelSet& ref = scalar_kernels();
  std::mt19937_64 rng(99);
  for (const KernelSet* k : vector_sets()) {
    CAPTURE(k->name);
    for (std::size_t count : {1u, 3u, 4u, 7u, 64u, 1001u}) {
      CAPTURE(count);
      const std::size_t degree = 1 + rng() % 8;
      std::vector<std::uint64_t> src(count + 1);
      for (std::size_t i = 0; i < count; ++i) src[i] = rng() & 0xFFFFFFFFu;
      src[count] = 0;
      std::vector<std::int32_t> nbr(degree * count);
      for (auto& x : nbr) x = static_cast<std::int32_t>(rng() % (count + 1));
      std::vector<std::uint64_t> a(count), b(count);
      ref.gather_sum(src.data(), a.data(), nbr.data(), count, count, degree);
      k->gather_sum(src.data(), b.data(), nbr.data(), count, count, degree);
      CHECK(a == b);

      std::vector<std::uint64_t> plane(count), carry(count);
      for (std::size_t i = 0; i < count; ++i) {
        plane[i] = rng() >> 20;
        carry[i] = rng() >> 40;
      }
      auto plane2 = plane, carry2 = carry;
      ref.carry_step(plane.data(), carry.data(), count);
      k->carry_step(plane2.data(), carry2.data(), count);
      CHECK(plane == plane2);
      CHECK(carry == carry2);

      std::vector<std::uint64_t> padded(count + 2), weight(count), r1(count), r2(count);
      for (auto& x : padded) x = rng() & 0xFFFFFFFFu;
      for (auto& x : weight) x = rng() & 0xFFFFu;
      ref.radial_step(padded.data(), r1.data(), weight.data(), count);
      k->radial_step(padded.data(), r2.data(), weight.data(), count);
      CHECK(r1 == r2);
    }
  }
}

TEST_CASE("scalar kernels follow their definitions") {
  const KernelSet& k = scalar_kernels();
  std::vector<std::uint64_t> src{5, 7, 11, 0};
  std::vector<std::int32_t> nbr{1, 2, 3, 0, 3, 1};  // degree 2, stride 3
  std::vector<std::uint64_t> dst(3);
  k.gather_sum(src.data(), dst.data(), nbr.data(), 3, 3, 2);
  CHECK(dst == std::vector<std::uint64_t>{7 + 5, 11 + 0, 0 + 7});

  std::vector<std::uint64_t> plane{(1ull << 33) + 5}, carry{3};
  k.carry_step(plane.data(), carry.data(), 1);
  CHECK(plane[0] == 8);
  CHECK(carry[0] == 2);

  std::vector<std::uint64_t> s{1, 2, 3, 4}, w{10, 100}, out(2);
  k.radial_step(s.data(), out.data(), w.data(), 2);
  CHECK(out == std::vector<std::uint64_t>{3 + 10 * 1, 4 + 100 * 2});
}
