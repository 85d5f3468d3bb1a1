#pragma once

#include <array>

#include "magicstego/image.hpp"

namespace magicstego {

/// Continuous HSI. Hue in degrees [0,360), saturation and intensity in [0,1].
/// Achromatic colours (s == 0) report hue 0.
struct HsiTriple {
  double h = 0.0;
  double s = 0.0;
  double i = 0.0;
};

/// Normalised RGB in [0,1]^3.
using UnitRgb = std::array<double, 3>;

HsiTriple rgb_to_hsi(const UnitRgb& rgb);
HsiTriple rgb_to_hsi(Pixel p);

/// Sector-based inverse. Throws OutOfGamut if any channel falls outside
/// [0,1] (beyond rounding slack) before quantisation.
UnitRgb hsi_to_unit_rgb(const HsiTriple& t);
Pixel hsi_to_rgb(const HsiTriple& t);

}  // namespace magicstego
