#include "magicstego/image.hpp"

#include <array>
#include <string>

#include "magicstego/kernels.hpp"

namespace magicstego {

std::span<const std::uint8_t> samples(const RgbImage& image) noexcept {
  auto px = image.cells();
  return {reinterpret_cast<const std::uint8_t*>(px.data()), px.size() * 3};
}

std::span<std::uint8_t> samples(RgbImage& image) noexcept {
  auto px = image.cells();
  return {reinterpret_cast<std::uint8_t*>(px.data()), px.size() * 3};
}

IntensityPlane compute_i_plane(const RgbImage& image) {
  IntensityPlane plane(image.width(), image.height());
  kernels::active_table().intensity(samples(image).data(), plane.cells().data(),
                                    image.size());
  return plane;
}

Pixel set_pixel_intensity(Pixel p, std::uint8_t target) {
  const int sum = int{p.r} + p.g + p.b;
  const int current = sum / 3;
  const int delta_i = int{target} - current;
  if (delta_i < -1 || delta_i > 1) {
    throw StegoError(ErrorCode::IntensityDeltaTooLarge,
                     "target intensity differs from pixel intensity by " +
                         std::to_string(delta_i));
  }
  if (delta_i == 0) return p;

  int new_sum = 3 * int{target} + sum % 3;
  if (new_sum > 765) new_sum = 765;

  std::array<int, 3> ch{p.r, p.g, p.b};
  int remaining = new_sum - sum;
  const int step = remaining > 0 ? 1 : -1;
  // One unit per channel per pass, R then G then B; saturated channels are
  // skipped so the others absorb their share. Terminates because
  // 0 <= new_sum <= 765.
  while (remaining != 0) {
    for (int& c : ch) {
      if (remaining == 0) break;
      const int moved = c + step;
      if (moved < 0 || moved > 255) continue;
      c = moved;
      remaining -= step;
    }
  }
  return {static_cast<std::uint8_t>(ch[0]), static_cast<std::uint8_t>(ch[1]),
          static_cast<std::uint8_t>(ch[2])};
}

RgbImage apply_i_plane(const RgbImage& image, const IntensityPlane& plane) {
  if (image.width() != plane.width() || image.height() != plane.height()) {
    throw StegoError(ErrorCode::DimensionMismatch,
                     "intensity plane dimensions do not match image");
  }
  RgbImage out = image;
  auto px = out.cells();
  auto target = plane.cells();
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (pixel_intensity(px[i]) != target[i]) {
      px[i] = set_pixel_intensity(px[i], target[i]);
    }
  }
  return out;
}

}  // namespace magicstego
