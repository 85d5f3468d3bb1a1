#pragma once

// Magic-LSB codec over the intensity plane.
//
// Wire format (see docs/WIRE_FORMAT.md for the full description):
//   - payload zero-padded to a multiple of 4 bytes, then MLEA-encrypted into
//     blocks B1..B4 of 2*padded_len bits each;
//   - cover transposed, I-plane = floor((R+G+B)/3), split into quadrants in
//     reading order, quadrant j rotated key[j mod |key|] mod 4 quarter turns
//     counter-clockwise;
//   - 32-bit big-endian unpadded length XOR derive_keystream(key, 32); bit i
//     goes to quadrant i/Q at position i%Q (Q = cells per quadrant), which is
//     quadrant 1 positions 0..31 once Q >= 32; B1 follows at position 32,
//     B2..B4 start at position 0 of quadrants 2..4;
//   - traversal order = magic_square(N/2) value order.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "magicstego/geometry.hpp"
#include "magicstego/image.hpp"
#include "magicstego/mlea.hpp"

namespace magicstego {

inline constexpr std::size_t kHeaderBits = 32;

/// Largest payload (bytes, multiple of 4) an N x N cover can carry.
/// Throws NonSquare, OddDimensions, or TooSmall (side < 6).
std::size_t capacity(std::size_t width, std::size_t height);

/// Replaces the LSB at traversal positions start..start+|bits|-1.
IntensityPlane plane_embed_bits(const IntensityPlane& plane, const BitString& bits,
                                std::size_t start);
BitString plane_extract_bits(const IntensityPlane& plane, std::size_t count,
                             std::size_t start);

/// Stego quadrants in the rotated frame, after writing and before
/// un-rotation and merge. Exposed for inspection and tests.
QuadrantSet embed_quadrants(const RgbImage& cover, std::span<const std::uint8_t> payload,
                            SecretKey key);

RgbImage embed(const RgbImage& cover, std::span<const std::uint8_t> payload,
               SecretKey key);

/// Throws CorruptHeader when the decoded length exceeds capacity (wrong key or
/// not a stego image).
std::vector<std::uint8_t> extract(const RgbImage& stego, SecretKey key);

}  // namespace magicstego
