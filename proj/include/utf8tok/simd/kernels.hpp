#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Inner loops with interchangeable implementations. The scalar variants are
// the reference; every other variant must produce bit-identical results.

namespace utf8tok::simd {

enum class Isa : std::uint8_t { scalar, avx2 };

std::string_view to_string(Isa isa) noexcept;

/// Which bytes `find_control` stops on.
enum class ControlClass : std::uint8_t {
  /// 0x00-0x1F except whitespace 0x09-0x0D, plus 0x7F.
  protocol,
  /// 0x00-0x1F and 0x7F.
  any,
};

struct Kernels {
  Isa isa;

  /// True iff `data[0, size)` is well-formed UTF-8.
  bool (*validate_utf8)(const std::uint8_t* data, std::size_t size) noexcept;

  /// Index of the first byte in the class, or `size` if there is none.
  std::size_t (*find_control)(const std::uint8_t* data, std::size_t size,
                              ControlClass cls) noexcept;

  /// dst[j] += src[j] in float32.
  void (*add_row)(float* dst, const float* src, std::size_t d) noexcept;

  /// out[j] = float(double(e[j]) + sum over set bits k of token, MSB first,
  /// of double(w[k * d + j])). `w` is the 8 x d bit projection, row-major.
  void (*fold_row)(const float* e, const float* w, std::uint8_t token, std::size_t d,
                   float* out) noexcept;
};

/// Kernels for a specific ISA, or nullptr when the CPU or build lacks it.
const Kernels* kernels_for(Isa isa) noexcept;

/// The kernels in use: the widest supported ISA unless the environment
/// variable UTF8TOK_ISA names a narrower one ("scalar").
const Kernels& active() noexcept;

bool cpu_supports(Isa isa) noexcept;

}  // namespace utf8tok::simd
