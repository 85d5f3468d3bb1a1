#include "magicstego/geometry.hpp"

namespace magicstego {

QuadrantSet split_quadrants(const IntensityPlane& plane) {
  if (plane.width() % 2 != 0 || plane.height() % 2 != 0) {
    throw StegoError(ErrorCode::OddDimensions, "plane dimensions must be even");
  }
  if (!plane.is_square()) {
    throw StegoError(ErrorCode::NonSquare, "plane must be square");
  }
  const std::size_t half = plane.width() / 2;
  QuadrantSet out;
  for (std::size_t j = 0; j < 4; ++j) {
    const std::size_t r0 = (j / 2) * half;
    const std::size_t c0 = (j % 2) * half;
    IntensityPlane tile(half, half);
    for (std::size_t r = 0; r < half; ++r) {
      for (std::size_t c = 0; c < half; ++c) tile.at(r, c) = plane.at(r0 + r, c0 + c);
    }
    out.q[j] = std::move(tile);
  }
  return out;
}

IntensityPlane merge_quadrants(const QuadrantSet& quads) {
  const std::size_t half = quads.q[0].width();
  for (const auto& tile : quads.q) {
    if (tile.width() != half || tile.height() != half) {
      throw StegoError(ErrorCode::TileMismatch, "quadrants must be equal squares");
    }
  }
  IntensityPlane out(2 * half, 2 * half);
  for (std::size_t j = 0; j < 4; ++j) {
    const std::size_t r0 = (j / 2) * half;
    const std::size_t c0 = (j % 2) * half;
    for (std::size_t r = 0; r < half; ++r) {
      for (std::size_t c = 0; c < half; ++c) out.at(r0 + r, c0 + c) = quads.q[j].at(r, c);
    }
  }
  return out;
}

IntensityPlane rotate_quarter(const IntensityPlane& plane, unsigned k) {
  if (!plane.is_square()) {
    throw StegoError(ErrorCode::NonSquare, "only square planes can be rotated");
  }
  const std::size_t n = plane.width();
  k %= 4;
  if (k == 0) return plane;
  IntensityPlane out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      switch (k) {
        case 1: out.at(r, c) = plane.at(c, n - 1 - r); break;
        case 2: out.at(r, c) = plane.at(n - 1 - r, n - 1 - c); break;
        default: out.at(r, c) = plane.at(n - 1 - c, r); break;
      }
    }
  }
  return out;
}

RotationSchedule rotation_schedule(SecretKey key) {
  if (key.empty()) throw StegoError(ErrorCode::EmptyKey, "secret key is empty");
  RotationSchedule s;
  for (std::size_t j = 0; j < 4; ++j) {
    s.turns[j] = static_cast<std::uint8_t>(key[j % key.size()] % 4);
  }
  return s;
}

}  // namespace magicstego
