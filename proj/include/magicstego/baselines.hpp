#pragma once

#include <cstddef>

#include "magicstego/image.hpp"
#include "magicstego/mlea.hpp"

namespace magicstego {

/// Classic k-bit LSB substitution over raster samples (R, G, B per pixel).
struct LsbConfig {
  unsigned k = 1;  // 1..5
};

/// Sample i takes bits [i*k, i*k + k) as its low k bits, first bit most
/// significant. |bits| must be a multiple of k and fit in 3*W*H*k.
RgbImage classic_lsb_embed(const RgbImage& image, const BitString& bits, LsbConfig cfg);
BitString classic_lsb_extract(const RgbImage& image, std::size_t count, LsbConfig cfg);

}  // namespace magicstego
