#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "magicstego/colorspace.hpp"
#include "test_support.hpp"

using namespace magicstego;

TEST(RgbToHsi, PureRed) {
  const auto t = rgb_to_hsi(Pixel{255, 0, 0});
  EXPECT_NEAR(t.h, 0.0, 1e-9);
  EXPECT_NEAR(t.s, 1.0, 1e-12);
  EXPECT_NEAR(t.i, 1.0 / 3.0, 1e-12);
}

TEST(RgbToHsi, GrayAxisHasZeroHue) {
  const auto t = rgb_to_hsi(Pixel{128, 128, 128});
  EXPECT_EQ(t.h, 0.0);
  EXPECT_EQ(t.s, 0.0);
  EXPECT_NEAR(t.i, 128.0 / 255.0, 1e-12);
}

TEST(RgbToHsi, Cyan) {
  // num = 0.5*((0-1)+(0-1)) = -1, den = sqrt(1 + 1*0) = 1, theta = 180.
  const auto t = rgb_to_hsi(Pixel{0, 255, 255});
  EXPECT_NEAR(t.h, 180.0, 1e-9);
  EXPECT_NEAR(t.s, 1.0, 1e-12);
  EXPECT_NEAR(t.i, 2.0 / 3.0, 1e-12);
}

TEST(RgbToHsi, BlackIsAllZero) {
  const auto t = rgb_to_hsi(Pixel{0, 0, 0});
  EXPECT_EQ(t.h, 0.0);
  EXPECT_EQ(t.s, 0.0);
  EXPECT_EQ(t.i, 0.0);
}

TEST(HsiToRgb, KnownPoints) {
  EXPECT_EQ(hsi_to_rgb({0.0, 0.0, 0.5}), (Pixel{128, 128, 128}));
  EXPECT_EQ(hsi_to_rgb({0.0, 1.0, 1.0 / 3.0}), (Pixel{255, 0, 0}));
  EXPECT_EQ(hsi_to_rgb({180.0, 1.0, 2.0 / 3.0}), (Pixel{0, 255, 255}));
}

TEST(HsiToRgb, OutOfGamutThrows) {
  try {
    hsi_to_rgb({0.0, 1.0, 0.9});
    FAIL() << "expected OutOfGamut";
  } catch (const StegoError& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfGamut);
  }
}

// In-gamut triples are generated from RGB points so the inverse is defined.
TEST(HsiRoundTrip, ContinuousGrid) {
  double worst = 0.0;
  const int steps = 40;
  for (int r = 0; r <= steps; ++r) {
    for (int g = 0; g <= steps; ++g) {
      for (int b = 0; b <= steps; ++b) {
        const UnitRgb rgb{double(r) / steps, double(g) / steps, double(b) / steps};
        const HsiTriple t = rgb_to_hsi(rgb);
        const HsiTriple back = rgb_to_hsi(hsi_to_unit_rgb(t));
        double dh = std::abs(back.h - t.h);
        dh = std::min(dh, 360.0 - dh);
        if (t.s < 1e-9) dh = 0.0;  // hue undefined on the gray axis
        worst = std::max({worst, dh / 360.0, std::abs(back.s - t.s), std::abs(back.i - t.i)});
        const UnitRgb again = hsi_to_unit_rgb(t);
        for (int c = 0; c < 3; ++c) worst = std::max(worst, std::abs(again[c] - rgb[c]));
      }
    }
  }
  EXPECT_LT(worst, 1e-6);
}

TEST(HsiRoundTrip, EightBitWithinOneStep) {
  testing_support::Rng rng(5);
  std::uniform_int_distribution<int> d(0, 255);
  int worst = 0;
  for (int n = 0; n < 1'000'000; ++n) {
    const Pixel p{static_cast<std::uint8_t>(d(rng)), static_cast<std::uint8_t>(d(rng)),
                  static_cast<std::uint8_t>(d(rng))};
    const Pixel q = hsi_to_rgb(rgb_to_hsi(p));
    worst = std::max({worst, std::abs(p.r - q.r), std::abs(p.g - q.g), std::abs(p.b - q.b)});
  }
  EXPECT_LE(worst, 1);
}
