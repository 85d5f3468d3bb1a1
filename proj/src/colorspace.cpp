#include "magicstego/colorspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace magicstego {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kGamutSlack = 1e-9;

}  // namespace

HsiTriple rgb_to_hsi(const UnitRgb& rgb) {
  const auto [r, g, b] = rgb;
  const double total = r + g + b;
  HsiTriple out;
  out.i = total / 3.0;
  if (total <= 0.0) return out;

  out.s = 1.0 - 3.0 * std::min({r, g, b}) / total;
  if (out.s < 1e-12) {
    out.s = 0.0;
    return out;
  }

  const double num = 0.5 * ((r - g) + (r - b));
  const double den = std::sqrt((r - g) * (r - g) + (r - b) * (g - b));
  if (den <= 0.0) return out;
  const double theta = std::acos(std::clamp(num / den, -1.0, 1.0)) / kDegToRad;
  out.h = b > g ? 360.0 - theta : theta;
  if (out.h >= 360.0) out.h -= 360.0;
  return out;
}

HsiTriple rgb_to_hsi(Pixel p) {
  return rgb_to_hsi(UnitRgb{p.r / 255.0, p.g / 255.0, p.b / 255.0});
}

UnitRgb hsi_to_unit_rgb(const HsiTriple& t) {
  // Within a 120 degree sector the trailing channel is i(1-s), the leading
  // channel follows the cosine ratio and the middle one closes the sum 3i.
  double h = std::fmod(t.h, 360.0);
  if (h < 0.0) h += 360.0;
  int sector = static_cast<int>(h / 120.0);
  if (sector > 2) sector = 2;
  const double local = (h - 120.0 * sector) * kDegToRad;

  const double low = t.i * (1.0 - t.s);
  const double lead =
      t.i * (1.0 + t.s * std::cos(local) / std::cos(60.0 * kDegToRad - local));
  const double mid = 3.0 * t.i - (low + lead);

  UnitRgb rgb{};
  switch (sector) {
    case 0: rgb = {lead, mid, low}; break;
    case 1: rgb = {low, lead, mid}; break;
    default: rgb = {mid, low, lead}; break;
  }
  for (double& c : rgb) {
    if (c < -kGamutSlack || c > 1.0 + kGamutSlack) {
      throw StegoError(ErrorCode::OutOfGamut, "HSI triple maps outside the RGB cube");
    }
    c = std::clamp(c, 0.0, 1.0);
  }
  return rgb;
}

Pixel hsi_to_rgb(const HsiTriple& t) {
  const UnitRgb rgb = hsi_to_unit_rgb(t);
  auto q = [](double c) { return static_cast<std::uint8_t>(std::lround(c * 255.0)); };
  return {q(rgb[0]), q(rgb[1]), q(rgb[2])};
}

}  // namespace magicstego
