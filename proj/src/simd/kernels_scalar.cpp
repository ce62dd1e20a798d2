#include "kernels_impl.hpp"

namespace utf8tok::simd::detail {
namespace {

// Well-formed byte sequences (Unicode Table 3-7):
//
//   U+0000..U+007F     00..7F
//   U+0080..U+07FF     C2..DF  80..BF
//   U+0800..U+0FFF     E0      A0..BF  80..BF
//   U+1000..U+CFFF     E1..EC  80..BF  80..BF
//   U+D000..U+D7FF     ED      80..9F  80..BF
//   U+E000..U+FFFF     EE..EF  80..BF  80..BF
//   U+10000..U+3FFFF   F0      90..BF  80..BF  80..BF
//   U+40000..U+FFFFF   F1..F3  80..BF  80..BF  80..BF
//   U+100000..U+10FFFF F4      80..8F  80..BF  80..BF
bool validate_utf8(const std::uint8_t* data, std::size_t size) noexcept {
  std::size_t i = 0;
  while (i < size) {
    const std::uint8_t b0 = data[i];
    if (b0 < 0x80) {
      ++i;
      continue;
    }
    std::size_t len;
    std::uint8_t lo = 0x80;
    std::uint8_t hi = 0xBF;
    if (b0 >= 0xC2 && b0 <= 0xDF) {
      len = 2;
    } else if (b0 >= 0xE0 && b0 <= 0xEF) {
      len = 3;
      if (b0 == 0xE0) lo = 0xA0;
      if (b0 == 0xED) hi = 0x9F;
    } else if (b0 >= 0xF0 && b0 <= 0xF4) {
      len = 4;
      if (b0 == 0xF0) lo = 0x90;
      if (b0 == 0xF4) hi = 0x8F;
    } else {
      return false;
    }
    if (size - i < len) return false;
    const std::uint8_t b1 = data[i + 1];
    if (b1 < lo || b1 > hi) return false;
    for (std::size_t k = 2; k < len; ++k) {
      if ((data[i + k] & 0xC0) != 0x80) return false;
    }
    i += len;
  }
  return true;
}

std::size_t find_control(const std::uint8_t* data, std::size_t size, ControlClass cls) noexcept {
  for (std::size_t i = 0; i < size; ++i) {
    if (is_control(data[i], cls)) return i;
  }
  return size;
}

void add_row(float* dst, const float* src, std::size_t d) noexcept {
  for (std::size_t j = 0; j < d; ++j) dst[j] += src[j];
}

void fold_row(const float* e, const float* w, std::uint8_t token, std::size_t d,
              float* out) noexcept {
  for (std::size_t j = 0; j < d; ++j) {
    double acc = e[j];
    for (unsigned k = 0; k < 8; ++k) {
      if ((token >> (7 - k)) & 1U) acc += static_cast<double>(w[k * d + j]);
    }
    out[j] = static_cast<float>(acc);
  }
}

}  // namespace

const Kernels scalar_kernels = {
    Isa::scalar, &validate_utf8, &find_control, &add_row, &fold_row,
};

}  // namespace utf8tok::simd::detail
