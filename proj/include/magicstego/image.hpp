#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "magicstego/error.hpp"

namespace magicstego {

struct Pixel {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Pixel&, const Pixel&) = default;
};
static_assert(sizeof(Pixel) == 3, "Pixel must pack to interleaved RGB");

/// Row-major W x H grid. Used for both colour images and intensity planes.
template <class T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t width, std::size_t height, T fill = T{})
      : width_(width), height_(height), cells_(width * height, fill) {}
  Grid(std::size_t width, std::size_t height, std::vector<T> cells)
      : width_(width), height_(height), cells_(std::move(cells)) {
    if (cells_.size() != width_ * height_) {
      throw StegoError(ErrorCode::DimensionMismatch,
                       "grid data length does not match width*height");
    }
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool is_square() const noexcept { return width_ == height_; }

  T& at(std::size_t row, std::size_t col) { return cells_[row * width_ + col]; }
  const T& at(std::size_t row, std::size_t col) const {
    return cells_[row * width_ + col];
  }

  std::span<T> cells() noexcept { return cells_; }
  std::span<const T> cells() const noexcept { return cells_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<T> cells_;
};

using RgbImage = Grid<Pixel>;
using IntensityPlane = Grid<std::uint8_t>;

/// Interleaved R,G,B sample view of an image (3 * width * height bytes).
std::span<const std::uint8_t> samples(const RgbImage& image) noexcept;
std::span<std::uint8_t> samples(RgbImage& image) noexcept;

/// floor((R+G+B)/3) for one pixel.
constexpr std::uint8_t pixel_intensity(Pixel p) noexcept {
  return static_cast<std::uint8_t>((unsigned{p.r} + p.g + p.b) / 3);
}

/// Integer achromatic plane: floor((R+G+B)/3) per pixel.
IntensityPlane compute_i_plane(const RgbImage& image);

/// Rewrites each pixel so that floor((R'+G'+B')/3) == target exactly.
///
/// The channel sum is moved to S' = 3*target + (S mod 3), dropping the
/// remainder toward zero only when S' would exceed 765. The difference is
/// spread one step per channel in R, G, B order; a channel that would leave
/// [0,255] hands its share to the remaining channels. Targets may differ from
/// the current intensity by at most one.
Pixel set_pixel_intensity(Pixel p, std::uint8_t target);

/// Writes a full intensity plane back into an image (see set_pixel_intensity).
RgbImage apply_i_plane(const RgbImage& image, const IntensityPlane& plane);

}  // namespace magicstego
