#pragma once

// Data-parallel inner loops. Every kernel has a portable scalar reference and
// optional SIMD variants; the active table is picked once at first use from
// the CPU feature set. Variants must produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace magicstego::kernels {

/// Exact integer moments of two equal-length sample streams.
struct Moments {
  std::uint64_t count = 0;
  std::uint64_t sum_a = 0;
  std::uint64_t sum_b = 0;
  std::uint64_t sum_aa = 0;
  std::uint64_t sum_bb = 0;
  std::uint64_t sum_ab = 0;
  std::uint64_t sum_abs_diff = 0;
  std::uint64_t sum_sq_diff = 0;
  std::uint8_t max_a = 0;
  std::uint8_t max_b = 0;

  friend bool operator==(const Moments&, const Moments&) = default;
};

using IntensityFn = void (*)(const std::uint8_t* rgb, std::uint8_t* out,
                             std::size_t pixels);
using DeinterleaveFn = void (*)(const std::uint8_t* rgb, std::uint8_t* r,
                                std::uint8_t* g, std::uint8_t* b,
                                std::size_t pixels);
using MomentsFn = Moments (*)(const std::uint8_t* a, const std::uint8_t* b,
                              std::size_t n);

struct KernelTable {
  std::string_view name;
  IntensityFn intensity;        // out[i] = floor((r+g+b)/3)
  DeinterleaveFn deinterleave;  // RGBRGB... -> R..., G..., B...
  MomentsFn moments;
};

const KernelTable& scalar_table() noexcept;

/// nullptr when not compiled in or the running CPU lacks AVX2.
const KernelTable* avx2_table() noexcept;

/// Best available table. MAGICSTEGO_KERNELS=scalar forces the reference path.
const KernelTable& active_table() noexcept;

}  // namespace magicstego::kernels
