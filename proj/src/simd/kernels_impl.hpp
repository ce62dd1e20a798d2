#pragma once

#include "utf8tok/simd/kernels.hpp"

namespace utf8tok::simd::detail {

extern const Kernels scalar_kernels;
#if defined(UTF8TOK_HAS_AVX2)
extern const Kernels avx2_kernels;
#endif

inline bool is_control(std::uint8_t b, ControlClass cls) noexcept {
  if (b == 0x7F) return true;
  if (b >= 0x20) return false;
  return cls == ControlClass::any || b < 0x09 || b > 0x0D;
}

}  // namespace utf8tok::simd::detail
