#include <gtest/gtest.h>

#include <vector>

#include "magicstego/kernels.hpp"
#include "test_support.hpp"

using magicstego::kernels::KernelTable;
using magicstego::kernels::avx2_table;
using magicstego::kernels::scalar_table;

namespace {

std::vector<const KernelTable*> simd_tables() {
  std::vector<const KernelTable*> out;
  if (const KernelTable* t = avx2_table()) out.push_back(t);
  return out;
}

}  // namespace

TEST(ScalarKernels, IntensityIsFloorOfMean) {
  const std::uint8_t rgb[] = {0, 0, 0, 255, 255, 255, 10, 20, 31, 1, 1, 0};
  std::uint8_t out[4];
  scalar_table().intensity(rgb, out, 4);
  EXPECT_EQ(out[0], 0);
  EXPECT_EQ(out[1], 255);
  EXPECT_EQ(out[2], 20);
  EXPECT_EQ(out[3], 0);
}

TEST(ScalarKernels, MomentsMatchDirectSums) {
  const std::uint8_t a[] = {1, 2, 3};
  const std::uint8_t b[] = {3, 2, 0};
  const auto m = scalar_table().moments(a, b, 3);
  EXPECT_EQ(m.count, 3u);
  EXPECT_EQ(m.sum_a, 6u);
  EXPECT_EQ(m.sum_b, 5u);
  EXPECT_EQ(m.sum_aa, 14u);
  EXPECT_EQ(m.sum_bb, 13u);
  EXPECT_EQ(m.sum_ab, 7u);
  EXPECT_EQ(m.sum_abs_diff, 5u);
  EXPECT_EQ(m.sum_sq_diff, 13u);
  EXPECT_EQ(m.max_a, 3);
  EXPECT_EQ(m.max_b, 3);
}

TEST(KernelDispatch, ActiveTableIsAvailable) {
  const auto& t = magicstego::kernels::active_table();
  EXPECT_FALSE(t.name.empty());
  if (avx2_table() == nullptr) GTEST_SKIP() << "AVX2 not available on this CPU";
}

// Every possible channel sum through the SIMD division path.
TEST(SimdKernels, IntensityMatchesScalarOverAllPixels) {
  const auto tables = simd_tables();
  if (tables.empty()) GTEST_SKIP() << "no SIMD kernels on this CPU";
  constexpr std::size_t kPixels = 256 * 256 * 256;
  std::vector<std::uint8_t> rgb(kPixels * 3);
  for (std::size_t i = 0; i < kPixels; ++i) {
    rgb[3 * i] = static_cast<std::uint8_t>(i >> 16);
    rgb[3 * i + 1] = static_cast<std::uint8_t>(i >> 8);
    rgb[3 * i + 2] = static_cast<std::uint8_t>(i);
  }
  std::vector<std::uint8_t> expect(kPixels), got(kPixels);
  scalar_table().intensity(rgb.data(), expect.data(), kPixels);
  for (const KernelTable* t : tables) {
    t->intensity(rgb.data(), got.data(), kPixels);
    EXPECT_EQ(got, expect) << t->name;
  }
}

TEST(SimdKernels, IntensityAndDeinterleaveHandleTails) {
  const auto tables = simd_tables();
  if (tables.empty()) GTEST_SKIP() << "no SIMD kernels on this CPU";
  testing_support::Rng rng(7);
  for (std::size_t n : {0u, 1u, 15u, 16u, 17u, 31u, 33u, 100u, 1023u}) {
    const auto rgb = testing_support::random_bytes(rng, 3 * n);
    std::vector<std::uint8_t> ei(n), er(n), eg(n), eb(n);
    scalar_table().intensity(rgb.data(), ei.data(), n);
    scalar_table().deinterleave(rgb.data(), er.data(), eg.data(), eb.data(), n);
    for (const KernelTable* t : tables) {
      std::vector<std::uint8_t> gi(n), gr(n), gg(n), gb(n);
      t->intensity(rgb.data(), gi.data(), n);
      t->deinterleave(rgb.data(), gr.data(), gg.data(), gb.data(), n);
      EXPECT_EQ(gi, ei) << t->name << " n=" << n;
      EXPECT_EQ(gr, er) << t->name << " n=" << n;
      EXPECT_EQ(gg, eg) << t->name << " n=" << n;
      EXPECT_EQ(gb, eb) << t->name << " n=" << n;
    }
  }
}

TEST(SimdKernels, MomentsMatchScalarOnRandomLengths) {
  const auto tables = simd_tables();
  if (tables.empty()) GTEST_SKIP() << "no SIMD kernels on this CPU";
  testing_support::Rng rng(11);
  for (std::size_t n : {0u, 1u, 31u, 32u, 33u, 64u, 1000u, 196608u}) {
    const auto a = testing_support::random_bytes(rng, n);
    const auto b = testing_support::random_bytes(rng, n);
    const auto expect = scalar_table().moments(a.data(), b.data(), n);
    for (const KernelTable* t : tables) {
      EXPECT_EQ(t->moments(a.data(), b.data(), n), expect) << t->name << " n=" << n;
    }
  }
}

// Saturated input across several flush intervals exercises the 32-bit lane
// accumulators at their worst case.
TEST(SimdKernels, MomentsDoNotOverflowOnSaturatedInput) {
  const auto tables = simd_tables();
  if (tables.empty()) GTEST_SKIP() << "no SIMD kernels on this CPU";
  const std::size_t n = 32 * 4096 * 3 + 17;
  std::vector<std::uint8_t> a(n, 255), b(n, 0);
  b[5] = 255;
  const auto expect = scalar_table().moments(a.data(), b.data(), n);
  EXPECT_EQ(expect.sum_aa, 255ull * 255 * n);
  for (const KernelTable* t : tables) {
    EXPECT_EQ(t->moments(a.data(), b.data(), n), expect) << t->name;
    EXPECT_EQ(t->moments(b.data(), a.data(), n), scalar_table().moments(b.data(), a.data(), n));
  }
}
