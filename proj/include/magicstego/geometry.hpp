#pragma once

#include <array>
#include <cstdint>

#include "magicstego/image.hpp"
#include "magicstego/mlea.hpp"

namespace magicstego {

/// Tiles in reading order: q[0] top-left, q[1] top-right, q[2] bottom-left,
/// q[3] bottom-right.
struct QuadrantSet {
  std::array<IntensityPlane, 4> q;

  friend bool operator==(const QuadrantSet&, const QuadrantSet&) = default;
};

/// Counter-clockwise quarter turns applied to each quadrant, each in 0..3.
struct RotationSchedule {
  std::array<std::uint8_t, 4> turns{};

  friend bool operator==(const RotationSchedule&, const RotationSchedule&) = default;
};

template <class T>
Grid<T> transpose(const Grid<T>& in) {
  Grid<T> out(in.height(), in.width());
  for (std::size_t r = 0; r < in.height(); ++r) {
    for (std::size_t c = 0; c < in.width(); ++c) out.at(c, r) = in.at(r, c);
  }
  return out;
}

/// Requires a square plane with even side.
QuadrantSet split_quadrants(const IntensityPlane& plane);
IntensityPlane merge_quadrants(const QuadrantSet& quads);

/// k counter-clockwise quarter turns (k taken mod 4). Square planes only.
IntensityPlane rotate_quarter(const IntensityPlane& plane, unsigned k);

/// turns[j] = key[j mod key.size()] mod 4.
RotationSchedule rotation_schedule(SecretKey key);

}  // namespace magicstego
