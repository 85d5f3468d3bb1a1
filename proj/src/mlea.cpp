#include "magicstego/mlea.hpp"

#include <algorithm>
#include <string>

#include "magicstego/error.hpp"

namespace magicstego {
namespace {

void require_key(SecretKey key) {
  if (key.empty()) throw StegoError(ErrorCode::EmptyKey, "secret key is empty");
}

}  // namespace

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b &= 1u;
}

BitString BitString::from_text(std::string_view text) {
  BitString out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '0' || c == '1') {
      out.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c != ' ' && c != '_') {
      throw StegoError(ErrorCode::InvalidConfig, "bit text may contain only 0 and 1");
    }
  }
  return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes) {
  BitString out;
  out.reserve(bytes.size() * 8);
  for (std::uint8_t byte : bytes) {
    for (int shift = 7; shift >= 0; --shift) out.push_back((byte >> shift) & 1u);
  }
  return out;
}

std::vector<std::uint8_t> BitString::to_bytes() const {
  if (bits_.size() % 8 != 0) {
    throw StegoError(ErrorCode::UnalignedLength, "bit count is not a multiple of 8");
  }
  std::vector<std::uint8_t> out(bits_.size() / 8, 0);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    out[i / 8] = static_cast<std::uint8_t>(out[i / 8] | (bits_[i] << (7 - i % 8)));
  }
  return out;
}

std::string BitString::to_text() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

BitString derive_keystream(SecretKey key, std::size_t out_len) {
  require_key(key);
  // Flip then reverse-within-byte, applied to the key bytes once.
  BitString base = BitString::from_bytes(key);
  flip_bits(base);
  reverse_bytes(base);

  BitString out;
  out.reserve(out_len);
  for (std::size_t i = 0; i < out_len; ++i) out.push_back(base[i % base.size()]);
  return out;
}

MessageBlocks split_blocks(const BitString& msg_bits) {
  if (msg_bits.size() % 32 != 0) {
    throw StegoError(ErrorCode::UnalignedLength,
                     "message bit length must be a multiple of 32");
  }
  MessageBlocks blocks;
  const std::size_t per_block = msg_bits.size() / 4;
  for (BitString* b : {&blocks.b1, &blocks.b2, &blocks.b3, &blocks.b4}) {
    b->reserve(per_block);
  }
  for (std::size_t i = 0; i < msg_bits.size(); i += 8) {
    auto t = [&](std::size_t k) { return msg_bits[i + k - 1]; };
    blocks.b1.push_back(t(8));
    blocks.b1.push_back(t(1));
    blocks.b2.push_back(t(7));
    blocks.b2.push_back(t(2));
    blocks.b3.push_back(t(6));
    blocks.b3.push_back(t(3));
    blocks.b4.push_back(t(5));
    blocks.b4.push_back(t(4));
  }
  return blocks;
}

BitString join_blocks(const MessageBlocks& blocks) {
  const std::size_t n = blocks.b1.size();
  if (blocks.b2.size() != n || blocks.b3.size() != n || blocks.b4.size() != n ||
      n % 2 != 0) {
    throw StegoError(ErrorCode::BlockLengthMismatch, "message blocks differ in length");
  }
  BitString out;
  out.reserve(4 * n);
  for (std::size_t k = 0; k < n; k += 2) {
    // Each block holds (t_high, t_low) pairs in append order.
    out.push_back(blocks.b1[k + 1]);
    out.push_back(blocks.b2[k + 1]);
    out.push_back(blocks.b3[k + 1]);
    out.push_back(blocks.b4[k + 1]);
    out.push_back(blocks.b4[k]);
    out.push_back(blocks.b3[k]);
    out.push_back(blocks.b2[k]);
    out.push_back(blocks.b1[k]);
  }
  return out;
}

void flip_bits(BitString& bits) noexcept {
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] ^= 1u;
}

void reverse_bytes(BitString& bits) {
  if (bits.size() % 8 != 0) {
    throw StegoError(ErrorCode::UnalignedLength, "bit count is not a multiple of 8");
  }
  for (std::size_t i = 0; i < bits.size(); i += 8) {
    for (std::size_t lo = i, hi = i + 7; lo < hi; ++lo, --hi) {
      std::swap(bits[lo], bits[hi]);
    }
  }
}

void key_mix(BitString& bits, const BitString& keystream) {
  if (keystream.empty()) {
    if (bits.empty()) return;
    throw StegoError(ErrorCode::EmptyKey, "keystream is empty");
  }
  for (std::size_t i = 0; i < bits.size(); ++i) {
    bits[i] ^= keystream[i % keystream.size()];
  }
}

MessageBlocks mlea_encrypt(std::span<const std::uint8_t> payload, SecretKey key) {
  require_key(key);
  if (payload.size() % 4 != 0) {
    throw StegoError(ErrorCode::UnalignedLength,
                     "payload must be padded to a multiple of 4 bytes");
  }
  MessageBlocks blocks = split_blocks(BitString::from_bytes(payload));
  const BitString keystream = derive_keystream(key, blocks.b1.size());
  for (BitString* b : {&blocks.b1, &blocks.b2, &blocks.b3, &blocks.b4}) {
    flip_bits(*b);
    reverse_bytes(*b);
    key_mix(*b, keystream);
  }
  return blocks;
}

std::vector<std::uint8_t> mlea_decrypt(const MessageBlocks& blocks, SecretKey key) {
  require_key(key);
  const std::size_t n = blocks.b1.size();
  if (blocks.b2.size() != n || blocks.b3.size() != n || blocks.b4.size() != n ||
      n % 8 != 0) {
    throw StegoError(ErrorCode::BlockLengthMismatch,
                     "message blocks must share a length that is a multiple of 8");
  }
  MessageBlocks work = blocks;
  const BitString keystream = derive_keystream(key, n);
  for (BitString* b : {&work.b1, &work.b2, &work.b3, &work.b4}) {
    key_mix(*b, keystream);
    reverse_bytes(*b);
    flip_bits(*b);
  }
  return join_blocks(work).to_bytes();
}

}  // namespace magicstego
