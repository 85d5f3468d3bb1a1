#include <algorithm>

#include "kernels_impl.hpp"

namespace magicstego::kernels::scalar {

void intensity(const std::uint8_t* rgb, std::uint8_t* out, std::size_t pixels) {
  for (std::size_t i = 0; i < pixels; ++i) {
    const unsigned sum = unsigned{rgb[3 * i]} + rgb[3 * i + 1] + rgb[3 * i + 2];
    out[i] = static_cast<std::uint8_t>(sum / 3);
  }
}

void deinterleave(const std::uint8_t* rgb, std::uint8_t* r, std::uint8_t* g,
                  std::uint8_t* b, std::size_t pixels) {
  for (std::size_t i = 0; i < pixels; ++i) {
    r[i] = rgb[3 * i];
    g[i] = rgb[3 * i + 1];
    b[i] = rgb[3 * i + 2];
  }
}

Moments moments(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  Moments m;
  m.count = n;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t x = a[i];
    const std::uint64_t y = b[i];
    const std::uint64_t d = x > y ? x - y : y - x;
    m.sum_a += x;
    m.sum_b += y;
    m.sum_aa += x * x;
    m.sum_bb += y * y;
    m.sum_ab += x * y;
    m.sum_abs_diff += d;
    m.sum_sq_diff += d * d;
    m.max_a = std::max(m.max_a, a[i]);
    m.max_b = std::max(m.max_b, b[i]);
  }
  return m;
}

}  // namespace magicstego::kernels::scalar
