#pragma once

#include "magicstego/kernels.hpp"

namespace magicstego::kernels {

namespace scalar {
void intensity(const std::uint8_t* rgb, std::uint8_t* out, std::size_t pixels);
void deinterleave(const std::uint8_t* rgb, std::uint8_t* r, std::uint8_t* g,
                  std::uint8_t* b, std::size_t pixels);
Moments moments(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
}  // namespace scalar

#if defined(MAGICSTEGO_HAVE_AVX2)
namespace avx2 {
void intensity(const std::uint8_t* rgb, std::uint8_t* out, std::size_t pixels);
void deinterleave(const std::uint8_t* rgb, std::uint8_t* r, std::uint8_t* g,
                  std::uint8_t* b, std::size_t pixels);
Moments moments(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
}  // namespace avx2
#endif

}  // namespace magicstego::kernels
