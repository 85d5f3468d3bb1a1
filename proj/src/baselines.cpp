#include "magicstego/baselines.hpp"

namespace magicstego {
namespace {

void check_config(LsbConfig cfg) {
  if (cfg.k < 1 || cfg.k > 5) {
    throw StegoError(ErrorCode::InvalidConfig, "LSB depth k must be in [1,5]");
  }
}

void check_fits(const RgbImage& image, std::size_t bit_count, LsbConfig cfg) {
  if (bit_count > image.size() * 3 * cfg.k) {
    throw StegoError(ErrorCode::CapacityExceeded, "bit count exceeds LSB capacity");
  }
}

}  // namespace

RgbImage classic_lsb_embed(const RgbImage& image, const BitString& bits, LsbConfig cfg) {
  check_config(cfg);
  if (bits.size() % cfg.k != 0) {
    throw StegoError(ErrorCode::UnalignedLength, "bit count must be a multiple of k");
  }
  check_fits(image, bits.size(), cfg);

  RgbImage out = image;
  auto s = samples(out);
  const unsigned mask = (1u << cfg.k) - 1u;
  for (std::size_t i = 0; i * cfg.k < bits.size(); ++i) {
    unsigned group = 0;
    for (unsigned j = 0; j < cfg.k; ++j) group = (group << 1) | bits[i * cfg.k + j];
    s[i] = static_cast<std::uint8_t>((s[i] & ~mask) | group);
  }
  return out;
}

BitString classic_lsb_extract(const RgbImage& image, std::size_t count, LsbConfig cfg) {
  check_config(cfg);
  check_fits(image, count, cfg);
  const auto s = samples(image);
  BitString out;
  out.reserve(count);
  for (std::size_t b = 0; b < count; ++b) {
    const std::size_t sample = b / cfg.k;
    const unsigned shift = cfg.k - 1 - static_cast<unsigned>(b % cfg.k);
    out.push_back((s[sample] >> shift) & 1u);
  }
  return out;
}

}  // namespace magicstego
