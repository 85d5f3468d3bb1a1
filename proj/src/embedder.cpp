#include "magicstego/embedder.hpp"

#include <string>

#include "magicstego/magic.hpp"

namespace magicstego {
namespace {

std::size_t padded(std::size_t len) { return (len + 3) / 4 * 4; }

void check_geometry(std::size_t width, std::size_t height) {
  if (width != height) throw StegoError(ErrorCode::NonSquare, "cover must be square");
  if (width % 2 != 0) {
    throw StegoError(ErrorCode::OddDimensions, "cover side must be even");
  }
  if (width < 6) {
    throw StegoError(ErrorCode::TooSmall, "cover side must be at least 6 pixels");
  }
}

void check_span(const IntensityPlane& plane, std::size_t start, std::size_t count) {
  if (!plane.is_square()) throw StegoError(ErrorCode::NonSquare, "sub-image must be square");
  if (plane.width() < 3) {
    throw StegoError(ErrorCode::UnsupportedOrder, "sub-image order must be at least 3");
  }
  if (count > 0 && start + count > plane.size()) {
    throw StegoError(ErrorCode::CapacityExceeded, "bit range exceeds sub-image");
  }
}

void write_lsbs(IntensityPlane& plane, const BitString& bits, std::size_t start) {
  check_span(plane, start, bits.size());
  const auto order = traversal_order(plane.width());
  for (std::size_t j = 0; j < bits.size(); ++j) {
    const CellPos p = order->positions[start + j];
    auto& cell = plane.at(p.row, p.col);
    cell = static_cast<std::uint8_t>((cell & 0xFEu) | bits[j]);
  }
}

void read_lsbs(const IntensityPlane& plane, std::size_t count, std::size_t start,
               BitString& out) {
  check_span(plane, start, count);
  const auto order = traversal_order(plane.width());
  for (std::size_t j = 0; j < count; ++j) {
    const CellPos p = order->positions[start + j];
    out.push_back(plane.at(p.row, p.col) & 1u);
  }
}

// Header bit i lives in quadrant i / Q at traversal position i % Q. For
// quadrants of 32 cells or more this is quadrant 1, positions 0..31.
BitString header_bits(std::uint32_t len, SecretKey key) {
  const std::uint8_t be[4] = {static_cast<std::uint8_t>(len >> 24),
                              static_cast<std::uint8_t>(len >> 16),
                              static_cast<std::uint8_t>(len >> 8),
                              static_cast<std::uint8_t>(len)};
  BitString bits = BitString::from_bytes(be);
  key_mix(bits, derive_keystream(key, kHeaderBits));
  return bits;
}

QuadrantSet rotated_quadrants(const RgbImage& image, const RotationSchedule& schedule) {
  QuadrantSet quads = split_quadrants(compute_i_plane(transpose(image)));
  for (std::size_t j = 0; j < 4; ++j) quads.q[j] = rotate_quarter(quads.q[j], schedule.turns[j]);
  return quads;
}

}  // namespace

std::size_t capacity(std::size_t width, std::size_t height) {
  check_geometry(width, height);
  const std::size_t cells = (width / 2) * (height / 2);
  if (cells < kHeaderBits) return 0;
  return (cells - kHeaderBits) / 2 / 4 * 4;
}

IntensityPlane plane_embed_bits(const IntensityPlane& plane, const BitString& bits,
                                std::size_t start) {
  IntensityPlane out = plane;
  write_lsbs(out, bits, start);
  return out;
}

BitString plane_extract_bits(const IntensityPlane& plane, std::size_t count,
                             std::size_t start) {
  BitString out;
  out.reserve(count);
  read_lsbs(plane, count, start, out);
  return out;
}

QuadrantSet embed_quadrants(const RgbImage& cover, std::span<const std::uint8_t> payload,
                            SecretKey key) {
  if (key.empty()) throw StegoError(ErrorCode::EmptyKey, "secret key is empty");
  const std::size_t cap = capacity(cover.width(), cover.height());
  if (payload.size() > cap) {
    throw StegoError(ErrorCode::PayloadTooLarge,
                     "payload of " + std::to_string(payload.size()) +
                         " bytes exceeds capacity of " + std::to_string(cap) + " bytes");
  }

  std::vector<std::uint8_t> padded_payload(payload.begin(), payload.end());
  padded_payload.resize(padded(payload.size()), 0);
  const MessageBlocks blocks = mlea_encrypt(padded_payload, key);

  QuadrantSet quads = rotated_quadrants(cover, rotation_schedule(key));
  const std::size_t cells = quads.q[0].size();

  const BitString header = header_bits(static_cast<std::uint32_t>(payload.size()), key);
  for (std::size_t i = 0; i < header.size(); ++i) {
    write_lsbs(quads.q[i / cells], BitString({header[i]}), i % cells);
  }

  write_lsbs(quads.q[0], blocks.b1, kHeaderBits);
  write_lsbs(quads.q[1], blocks.b2, 0);
  write_lsbs(quads.q[2], blocks.b3, 0);
  write_lsbs(quads.q[3], blocks.b4, 0);
  return quads;
}

RgbImage embed(const RgbImage& cover, std::span<const std::uint8_t> payload,
               SecretKey key) {
  QuadrantSet quads = embed_quadrants(cover, payload, key);
  const RotationSchedule schedule = rotation_schedule(key);
  for (std::size_t j = 0; j < 4; ++j) {
    quads.q[j] = rotate_quarter(quads.q[j], (4u - schedule.turns[j]) % 4u);
  }
  const RgbImage transposed = transpose(cover);
  return transpose(apply_i_plane(transposed, merge_quadrants(quads)));
}

std::vector<std::uint8_t> extract(const RgbImage& stego, SecretKey key) {
  if (key.empty()) throw StegoError(ErrorCode::EmptyKey, "secret key is empty");
  const std::size_t cap = capacity(stego.width(), stego.height());
  const QuadrantSet quads = rotated_quadrants(stego, rotation_schedule(key));
  const std::size_t cells = quads.q[0].size();

  BitString header;
  header.reserve(kHeaderBits);
  for (std::size_t i = 0; i < kHeaderBits; ++i) {
    read_lsbs(quads.q[i / cells], 1, i % cells, header);
  }
  key_mix(header, derive_keystream(key, kHeaderBits));
  const auto be = header.to_bytes();
  const std::uint32_t len = (std::uint32_t{be[0]} << 24) | (std::uint32_t{be[1]} << 16) |
                            (std::uint32_t{be[2]} << 8) | std::uint32_t{be[3]};
  if (len > cap) {
    throw StegoError(ErrorCode::CorruptHeader,
                     "decoded payload length exceeds capacity; wrong key or not a stego image");
  }

  const std::size_t block_bits = 2 * padded(len);
  MessageBlocks blocks{plane_extract_bits(quads.q[0], block_bits, kHeaderBits),
                       plane_extract_bits(quads.q[1], block_bits, 0),
                       plane_extract_bits(quads.q[2], block_bits, 0),
                       plane_extract_bits(quads.q[3], block_bits, 0)};
  std::vector<std::uint8_t> payload = mlea_decrypt(blocks, key);
  payload.resize(len);
  return payload;
}

}  // namespace magicstego
