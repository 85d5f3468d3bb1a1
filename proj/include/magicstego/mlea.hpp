#pragma once

// Multi-level encryption: bit-pair splitting into four blocks, global bit
// flip, per-byte bit reversal and key mixing. A keyed scrambler, not a
// cipher with any claimed cryptographic strength.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace magicstego {

/// Ordered bits, one per element. Bytes serialise most significant bit first.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<std::uint8_t> bits);

  /// Parses a string of '0'/'1' characters.
  static BitString from_text(std::string_view text);
  static BitString from_bytes(std::span<const std::uint8_t> bytes);

  /// Packs MSB-first; size() must be a multiple of 8.
  std::vector<std::uint8_t> to_bytes() const;
  std::string to_text() const;

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::uint8_t& operator[](std::size_t i) { return bits_[i]; }
  void push_back(std::uint8_t bit) { bits_.push_back(bit & 1u); }
  void reserve(std::size_t n) { bits_.reserve(n); }

  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

using SecretKey = std::span<const std::uint8_t>;

inline SecretKey key_view(std::string_view key) noexcept {
  return {reinterpret_cast<const std::uint8_t*>(key.data()), key.size()};
}

struct MessageBlocks {
  BitString b1, b2, b3, b4;

  friend bool operator==(const MessageBlocks&, const MessageBlocks&) = default;
};

/// Key bits MSB-first, inverted, bit-reversed per byte, then repeated
/// cyclically up to out_len bits.
BitString derive_keystream(SecretKey key, std::size_t out_len);

/// For each byte t1..t8 (MSB first): b1 += t8,t1; b2 += t7,t2; b3 += t6,t3;
/// b4 += t5,t4. Input length must be a multiple of 32 bits.
MessageBlocks split_blocks(const BitString& msg_bits);
BitString join_blocks(const MessageBlocks& blocks);

void flip_bits(BitString& bits) noexcept;
/// Reverses each consecutive 8-bit group; size must be a multiple of 8.
void reverse_bytes(BitString& bits);
/// XORs bit i with keystream bit (i mod keystream size).
void key_mix(BitString& bits, const BitString& keystream);

/// payload length must be a multiple of 4 bytes.
MessageBlocks mlea_encrypt(std::span<const std::uint8_t> payload, SecretKey key);
std::vector<std::uint8_t> mlea_decrypt(const MessageBlocks& blocks, SecretKey key);

}  // namespace magicstego
