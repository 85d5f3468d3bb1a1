// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <array>

#include "kernels_impl.hpp"

namespace magicstego::kernels::avx2 {
namespace {

constexpr char Z = static_cast<char>(0x80);

// pshufb masks gathering one channel of 16 interleaved pixels from the three
// 16-byte loads that cover them.
struct ChannelMasks {
  __m128i from0, from1, from2;
};

inline ChannelMasks red_masks() {
  return {_mm_setr_epi8(0, 3, 6, 9, 12, 15, Z, Z, Z, Z, Z, Z, Z, Z, Z, Z),
          _mm_setr_epi8(Z, Z, Z, Z, Z, Z, 2, 5, 8, 11, 14, Z, Z, Z, Z, Z),
          _mm_setr_epi8(Z, Z, Z, Z, Z, Z, Z, Z, Z, Z, Z, 1, 4, 7, 10, 13)};
}

inline ChannelMasks green_masks() {
  return {_mm_setr_epi8(1, 4, 7, 10, 13, Z, Z, Z, Z, Z, Z, Z, Z, Z, Z, Z),
          _mm_setr_epi8(Z, Z, Z, Z, Z, 0, 3, 6, 9, 12, 15, Z, Z, Z, Z, Z),
          _mm_setr_epi8(Z, Z, Z, Z, Z, Z, Z, Z, Z, Z, Z, 2, 5, 8, 11, 14)};
}

inline ChannelMasks blue_masks() {
  return {_mm_setr_epi8(2, 5, 8, 11, 14, Z, Z, Z, Z, Z, Z, Z, Z, Z, Z, Z),
          _mm_setr_epi8(Z, Z, Z, Z, Z, 1, 4, 7, 10, 13, Z, Z, Z, Z, Z, Z),
          _mm_setr_epi8(Z, Z, Z, Z, Z, Z, Z, Z, Z, Z, 0, 3, 6, 9, 12, 15)};
}

inline __m128i gather(const __m128i v[3], const ChannelMasks& m) {
  return _mm_or_si128(
      _mm_or_si128(_mm_shuffle_epi8(v[0], m.from0), _mm_shuffle_epi8(v[1], m.from1)),
      _mm_shuffle_epi8(v[2], m.from2));
}

inline void load16(const std::uint8_t* rgb, __m128i v[3]) {
  v[0] = _mm_loadu_si128(reinterpret_cast<const __m128i*>(rgb));
  v[1] = _mm_loadu_si128(reinterpret_cast<const __m128i*>(rgb + 16));
  v[2] = _mm_loadu_si128(reinterpret_cast<const __m128i*>(rgb + 32));
}

inline std::uint64_t hsum_epi64(__m256i v) {
  alignas(32) std::array<std::uint64_t, 4> lanes;
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

// Adds the eight unsigned 32-bit lanes of v into four 64-bit lanes of acc.
inline __m256i widen_add(__m256i acc, __m256i v) {
  acc = _mm256_add_epi64(acc, _mm256_cvtepu32_epi64(_mm256_castsi256_si128(v)));
  return _mm256_add_epi64(acc, _mm256_cvtepu32_epi64(_mm256_extracti128_si256(v, 1)));
}

inline std::uint8_t hmax_epu8(__m256i v) {
  alignas(32) std::array<std::uint8_t, 32> lanes;
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), v);
  return *std::max_element(lanes.begin(), lanes.end());
}

}  // namespace

void intensity(const std::uint8_t* rgb, std::uint8_t* out, std::size_t pixels) {
  const ChannelMasks rm = red_masks(), gm = green_masks(), bm = blue_masks();
  // floor(x/3) == (x * 21846) >> 16 for every x in [0, 765].
  const __m256i third = _mm256_set1_epi16(21846);
  std::size_t i = 0;
  for (; i + 16 <= pixels; i += 16) {
    __m128i v[3];
    load16(rgb + 3 * i, v);
    const __m256i r = _mm256_cvtepu8_epi16(gather(v, rm));
    const __m256i g = _mm256_cvtepu8_epi16(gather(v, gm));
    const __m256i b = _mm256_cvtepu8_epi16(gather(v, bm));
    const __m256i sum = _mm256_add_epi16(_mm256_add_epi16(r, g), b);
    const __m256i q = _mm256_mulhi_epu16(sum, third);
    const __m128i packed = _mm_packus_epi16(_mm256_castsi256_si128(q),
                                            _mm256_extracti128_si256(q, 1));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), packed);
  }
  scalar::intensity(rgb + 3 * i, out + i, pixels - i);
}

void deinterleave(const std::uint8_t* rgb, std::uint8_t* r, std::uint8_t* g,
                  std::uint8_t* b, std::size_t pixels) {
  const ChannelMasks rm = red_masks(), gm = green_masks(), bm = blue_masks();
  std::size_t i = 0;
  for (; i + 16 <= pixels; i += 16) {
    __m128i v[3];
    load16(rgb + 3 * i, v);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(r + i), gather(v, rm));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(g + i), gather(v, gm));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(b + i), gather(v, bm));
  }
  scalar::deinterleave(rgb + 3 * i, r + i, g + i, b + i, pixels - i);
}

Moments moments(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  __m256i sum_a = zero, sum_b = zero, sum_abs = zero;
  __m256i sum_aa = zero, sum_bb = zero, sum_ab = zero, sum_sq = zero;
  __m256i max_a = zero, max_b = zero;

  // Each step adds at most 2 * 2 * 255^2 to a 32-bit lane; flushing every
  // 4096 steps keeps lanes below 2^31.
  constexpr std::size_t kFlushEvery = 4096;
  std::size_t i = 0;
  while (i + 32 <= n) {
    __m256i acc_aa = zero, acc_bb = zero, acc_ab = zero, acc_sq = zero;
    for (std::size_t step = 0; step < kFlushEvery && i + 32 <= n; ++step, i += 32) {
      const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
      const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
      sum_a = _mm256_add_epi64(sum_a, _mm256_sad_epu8(va, zero));
      sum_b = _mm256_add_epi64(sum_b, _mm256_sad_epu8(vb, zero));
      sum_abs = _mm256_add_epi64(sum_abs, _mm256_sad_epu8(va, vb));
      max_a = _mm256_max_epu8(max_a, va);
      max_b = _mm256_max_epu8(max_b, vb);

      const __m256i a_lo = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(va));
      const __m256i a_hi = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(va, 1));
      const __m256i b_lo = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(vb));
      const __m256i b_hi = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(vb, 1));
      const __m256i d_lo = _mm256_sub_epi16(a_lo, b_lo);
      const __m256i d_hi = _mm256_sub_epi16(a_hi, b_hi);

      acc_aa = _mm256_add_epi32(acc_aa, _mm256_add_epi32(_mm256_madd_epi16(a_lo, a_lo),
                                                         _mm256_madd_epi16(a_hi, a_hi)));
      acc_bb = _mm256_add_epi32(acc_bb, _mm256_add_epi32(_mm256_madd_epi16(b_lo, b_lo),
                                                         _mm256_madd_epi16(b_hi, b_hi)));
      acc_ab = _mm256_add_epi32(acc_ab, _mm256_add_epi32(_mm256_madd_epi16(a_lo, b_lo),
                                                         _mm256_madd_epi16(a_hi, b_hi)));
      acc_sq = _mm256_add_epi32(acc_sq, _mm256_add_epi32(_mm256_madd_epi16(d_lo, d_lo),
                                                         _mm256_madd_epi16(d_hi, d_hi)));
    }
    sum_aa = widen_add(sum_aa, acc_aa);
    sum_bb = widen_add(sum_bb, acc_bb);
    sum_ab = widen_add(sum_ab, acc_ab);
    sum_sq = widen_add(sum_sq, acc_sq);
  }

  Moments m = scalar::moments(a + i, b + i, n - i);
  m.count = n;
  m.sum_a += hsum_epi64(sum_a);
  m.sum_b += hsum_epi64(sum_b);
  m.sum_abs_diff += hsum_epi64(sum_abs);
  m.sum_aa += hsum_epi64(sum_aa);
  m.sum_bb += hsum_epi64(sum_bb);
  m.sum_ab += hsum_epi64(sum_ab);
  m.sum_sq_diff += hsum_epi64(sum_sq);
  if (i > 0) {
    m.max_a = std::max(m.max_a, hmax_epu8(max_a));
    m.max_b = std::max(m.max_b, hmax_epu8(max_b));
  }
  return m;
}

}  // namespace magicstego::kernels::avx2
