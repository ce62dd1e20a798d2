#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "utf8tok/errors.hpp"
#include "utf8tok/token_buffer.hpp"

namespace utf8tok {

enum class Utf8ErrorKind : std::uint8_t {
  invalid_leading_byte,
  truncated_sequence,
  invalid_continuation,
  overlong_or_out_of_range,
  /// Well-formed but rarely seen leading byte (0xC2, 0xC3, 0xF1, 0xF2, 0xF4).
  rare_leading_byte,
};

std::string_view to_string(Utf8ErrorKind kind) noexcept;

/// One finding from `validate_utf8`. Errors are anchored at the first byte of
/// the maximal ill-formed subsequence; `byte_value` is the byte at `offset`.
struct Utf8Diagnostic {
  std::size_t offset = 0;
  Utf8ErrorKind kind = Utf8ErrorKind::invalid_leading_byte;
  std::uint8_t byte_value = 0;

  bool is_advisory() const noexcept { return kind == Utf8ErrorKind::rare_leading_byte; }

  friend bool operator==(const Utf8Diagnostic&, const Utf8Diagnostic&) = default;
};

enum class Advisories : bool { exclude = false, include = true };

/// Returns every ill-formed subsequence in `tokens`, sorted by offset. The
/// result is empty iff the bytes are valid UTF-8, unless advisories are
/// requested, in which case rare-but-valid leading bytes are reported too.
std::vector<Utf8Diagnostic> validate_utf8(TokenView tokens,
                                          Advisories advisories = Advisories::exclude);

/// Fast yes/no validity check using the best available kernel.
bool is_valid_utf8(TokenView tokens) noexcept;

/// Result of decoding one code point at the front of a byte range.
struct DecodeStep {
  char32_t code_point = 0;
  /// Bytes consumed. On error this is the length of the maximal ill-formed
  /// subsequence (always >= 1), i.e. how far to skip before resynchronizing.
  std::size_t length = 0;
  bool ok = false;
  Utf8ErrorKind error = Utf8ErrorKind::invalid_leading_byte;
};

/// Decodes the code point starting at `tokens[0]`. Requires a non-empty range.
DecodeStep decode_one(TokenView tokens) noexcept;

/// Appends the UTF-8 encoding of `cp`. Throws EncodeError for surrogates and
/// values above U+10FFFF; `index` is only used for the error report.
void append_utf8(std::string& out, char32_t cp, std::size_t index = 0);

class DecodeError : public Error {
 public:
  explicit DecodeError(const Utf8Diagnostic& diagnostic);

  const Utf8Diagnostic& diagnostic() const noexcept { return diagnostic_; }

 private:
  Utf8Diagnostic diagnostic_;
};

}  // namespace utf8tok
