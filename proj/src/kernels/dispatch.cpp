#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace magicstego::kernels {

const KernelTable& scalar_table() noexcept {
  static const KernelTable table{"scalar", &scalar::intensity,
                                 &scalar::deinterleave, &scalar::moments};
  return table;
}

const KernelTable* avx2_table() noexcept {
#if defined(MAGICSTEGO_HAVE_AVX2)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  static const KernelTable table{"avx2", &avx2::intensity, &avx2::deinterleave,
                                 &avx2::moments};
  return supported ? &table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_table() noexcept {
  static const KernelTable* chosen = [] {
    const char* forced = std::getenv("MAGICSTEGO_KERNELS");
    if (forced != nullptr && std::string_view(forced) == "scalar") {
      return &scalar_table();
    }
    if (const KernelTable* t = avx2_table()) return t;
    return &scalar_table();
  }();
  return *chosen;
}

}  // namespace magicstego::kernels
