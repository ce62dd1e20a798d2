// AVX2 variants. This translation unit is compiled with -mavx2 and is only
// reached through the dispatcher after a CPUID check.

#include <immintrin.h>

#include <cstring>

#include "kernels_impl.hpp"

namespace utf8tok::simd::detail {
namespace {

// UTF-8 validation after Keiser & Lemire, "Validating UTF-8 in less than one
// instruction per byte". Each pair of adjacent bytes is classified through
// three nibble lookups whose AND is non-zero exactly for an illegal pair;
// 3rd/4th continuation bytes are checked separately against the lead two or
// three positions back.

constexpr std::uint8_t kTooShort = 1 << 0;     // 11______ 0_______
constexpr std::uint8_t kTooLong = 1 << 1;      // 0_______ 10______
constexpr std::uint8_t kOverlong3 = 1 << 2;    // 11100000 100_____
constexpr std::uint8_t kTooLarge = 1 << 3;     // 11110100 1001____, 11110101+
constexpr std::uint8_t kSurrogate = 1 << 4;    // 11101101 101_____
constexpr std::uint8_t kOverlong2 = 1 << 5;    // 1100000_ 10______
constexpr std::uint8_t kTooLarge1000 = 1 << 6; // 11110101+ 1000____
constexpr std::uint8_t kOverlong4 = 1 << 6;    // 11110000 1000____
constexpr std::uint8_t kTwoConts = 1 << 7;     // 10______ 10______
constexpr std::uint8_t kCarry = kTooShort | kTooLong | kTwoConts;

inline __m256i table16(std::uint8_t (&&t)[16]) {
  __m128i lane;
  std::memcpy(&lane, t, 16);
  return _mm256_broadcastsi128_si256(lane);
}

inline __m256i high_nibble(__m256i v) {
  return _mm256_and_si256(_mm256_srli_epi16(v, 4), _mm256_set1_epi8(0x0F));
}

template <int N>
inline __m256i prev(__m256i input, __m256i prev_input) {
  return _mm256_alignr_epi8(input, _mm256_permute2x128_si256(prev_input, input, 0x21), 16 - N);
}

struct Utf8Checker {
  __m256i byte_1_high_table = table16({
      kTooLong, kTooLong, kTooLong, kTooLong, kTooLong, kTooLong, kTooLong, kTooLong,
      kTwoConts, kTwoConts, kTwoConts, kTwoConts,
      kTooShort | kOverlong2,
      kTooShort,
      kTooShort | kOverlong3 | kSurrogate,
      kTooShort | kTooLarge | kTooLarge1000 | kOverlong4,
  });
  __m256i byte_1_low_table = table16({
      kCarry | kOverlong3 | kOverlong2 | kOverlong4,
      kCarry | kOverlong2,
      kCarry,
      kCarry,
      kCarry | kTooLarge,
      kCarry | kTooLarge | kTooLarge1000,
      kCarry | kTooLarge | kTooLarge1000,
      kCarry | kTooLarge | kTooLarge1000,
      kCarry | kTooLarge | kTooLarge1000,
      kCarry | kTooLarge | kTooLarge1000,
      kCarry | kTooLarge | kTooLarge1000,
      kCarry | kTooLarge | kTooLarge1000,
      kCarry | kTooLarge | kTooLarge1000,
      kCarry | kTooLarge | kTooLarge1000 | kSurrogate,
      kCarry | kTooLarge | kTooLarge1000,
      kCarry | kTooLarge | kTooLarge1000,
  });
  __m256i byte_2_high_table = table16({
      kTooShort, kTooShort, kTooShort, kTooShort, kTooShort, kTooShort, kTooShort, kTooShort,
      kTooLong | kOverlong2 | kTwoConts | kOverlong3 | kTooLarge1000 | kOverlong4,
      kTooLong | kOverlong2 | kTwoConts | kOverlong3 | kTooLarge,
      kTooLong | kOverlong2 | kTwoConts | kSurrogate | kTooLarge,
      kTooLong | kOverlong2 | kTwoConts | kSurrogate | kTooLarge,
      kTooShort, kTooShort, kTooShort, kTooShort,
  });
  // A lead byte this close to the end of a block needs bytes from the next.
  __m256i incomplete_max = _mm256_setr_epi8(
      -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1,
      -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1,
      static_cast<char>(0xF0 - 1), static_cast<char>(0xE0 - 1), static_cast<char>(0xC0 - 1));

  __m256i error = _mm256_setzero_si256();
  __m256i prev_input = _mm256_setzero_si256();
  __m256i prev_incomplete = _mm256_setzero_si256();

  void check_block(__m256i input) {
    if (_mm256_movemask_epi8(input) == 0) {
      error = _mm256_or_si256(error, prev_incomplete);
      prev_incomplete = _mm256_setzero_si256();
      prev_input = input;
      return;
    }
    const __m256i prev1 = prev<1>(input, prev_input);
    const __m256i low_mask = _mm256_set1_epi8(0x0F);
    const __m256i special = _mm256_and_si256(
        _mm256_and_si256(_mm256_shuffle_epi8(byte_1_high_table, high_nibble(prev1)),
                         _mm256_shuffle_epi8(byte_1_low_table, _mm256_and_si256(prev1, low_mask))),
        _mm256_shuffle_epi8(byte_2_high_table, high_nibble(input)));

    const __m256i prev2 = prev<2>(input, prev_input);
    const __m256i prev3 = prev<3>(input, prev_input);
    const __m256i is_third = _mm256_subs_epu8(prev2, _mm256_set1_epi8(static_cast<char>(0xE0 - 0x80)));
    const __m256i is_fourth = _mm256_subs_epu8(prev3, _mm256_set1_epi8(static_cast<char>(0xF0 - 0x80)));
    const __m256i must_be_cont = _mm256_and_si256(_mm256_or_si256(is_third, is_fourth),
                                                  _mm256_set1_epi8(static_cast<char>(0x80)));
    error = _mm256_or_si256(error, _mm256_xor_si256(must_be_cont, special));

    prev_incomplete = _mm256_subs_epu8(input, incomplete_max);
    prev_input = input;
  }
};

bool validate_utf8(const std::uint8_t* data, std::size_t size) noexcept {
  Utf8Checker checker;
  std::size_t i = 0;
  for (; i + 32 <= size; i += 32) {
    checker.check_block(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i)));
  }
  if (i < size) {
    alignas(32) std::uint8_t tail[32] = {};
    std::memcpy(tail, data + i, size - i);
    checker.check_block(_mm256_load_si256(reinterpret_cast<const __m256i*>(tail)));
  }
  const __m256i error = _mm256_or_si256(checker.error, checker.prev_incomplete);
  return _mm256_testz_si256(error, error) != 0;
}

std::size_t find_control(const std::uint8_t* data, std::size_t size, ControlClass cls) noexcept {
  const __m256i max_c0 = _mm256_set1_epi8(0x1F);
  const __m256i nine = _mm256_set1_epi8(0x09);
  const __m256i four = _mm256_set1_epi8(0x04);
  const __m256i del = _mm256_set1_epi8(0x7F);
  std::size_t i = 0;
  for (; i + 32 <= size; i += 32) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    __m256i hit = _mm256_cmpeq_epi8(_mm256_min_epu8(x, max_c0), x);
    if (cls == ControlClass::protocol) {
      const __m256i shifted = _mm256_sub_epi8(x, nine);
      const __m256i ws = _mm256_cmpeq_epi8(_mm256_min_epu8(shifted, four), shifted);
      hit = _mm256_andnot_si256(ws, hit);
    }
    hit = _mm256_or_si256(hit, _mm256_cmpeq_epi8(x, del));
    const auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(hit));
    if (mask != 0) return i + static_cast<std::size_t>(__builtin_ctz(mask));
  }
  for (; i < size; ++i) {
    if (is_control(data[i], cls)) return i;
  }
  return size;
}

void add_row(float* dst, const float* src, std::size_t d) noexcept {
  std::size_t j = 0;
  for (; j + 8 <= d; j += 8) {
    _mm256_storeu_ps(dst + j, _mm256_add_ps(_mm256_loadu_ps(dst + j), _mm256_loadu_ps(src + j)));
  }
  for (; j < d; ++j) dst[j] += src[j];
}

void fold_row(const float* e, const float* w, std::uint8_t token, std::size_t d,
              float* out) noexcept {
  std::size_t j = 0;
  for (; j + 4 <= d; j += 4) {
    __m256d acc = _mm256_cvtps_pd(_mm_loadu_ps(e + j));
    for (unsigned k = 0; k < 8; ++k) {
      if ((token >> (7 - k)) & 1U) {
        acc = _mm256_add_pd(acc, _mm256_cvtps_pd(_mm_loadu_ps(w + k * d + j)));
      }
    }
    _mm_storeu_ps(out + j, _mm256_cvtpd_ps(acc));
  }
  for (; j < d; ++j) {
    double acc = e[j];
    for (unsigned k = 0; k < 8; ++k) {
      if ((token >> (7 - k)) & 1U) acc += static_cast<double>(w[k * d + j]);
    }
    out[j] = static_cast<float>(acc);
  }
}

}  // namespace

const Kernels avx2_kernels = {
    Isa::avx2, &validate_utf8, &find_control, &add_row, &fold_row,
};

}  // namespace utf8tok::simd::detail
