#include "utf8tok/utf8.hpp"

#include <fmt/format.h>

#include "utf8tok/simd/kernels.hpp"

namespace utf8tok {

std::string_view to_string(Utf8ErrorKind kind) noexcept {
  switch (kind) {
    case Utf8ErrorKind::invalid_leading_byte:
      return "invalid-leading-byte";
    case Utf8ErrorKind::truncated_sequence:
      return "truncated-sequence";
    case Utf8ErrorKind::invalid_continuation:
      return "invalid-continuation";
    case Utf8ErrorKind::overlong_or_out_of_range:
      return "overlong-or-out-of-range";
    case Utf8ErrorKind::rare_leading_byte:
      return "rare-leading-byte";
  }
  return "unknown";
}

namespace {

constexpr bool is_continuation(std::uint8_t b) noexcept { return (b & 0xC0) == 0x80; }

constexpr bool is_rare_leading_byte(std::uint8_t b) noexcept {
  return b == 0xC2 || b == 0xC3 || b == 0xF1 || b == 0xF2 || b == 0xF4;
}

DecodeStep fail(Utf8ErrorKind kind, std::size_t length) noexcept {
  return DecodeStep{.code_point = 0, .length = length, .ok = false, .error = kind};
}

}  // namespace

DecodeStep decode_one(TokenView tokens) noexcept {
  const std::uint8_t b0 = tokens[0];
  if (b0 < 0x80) return DecodeStep{.code_point = b0, .length = 1, .ok = true};
  if (is_continuation(b0)) return fail(Utf8ErrorKind::invalid_continuation, 1);
  if (b0 < 0xC2 || b0 > 0xF4) return fail(Utf8ErrorKind::invalid_leading_byte, 1);

  std::size_t len = 2;
  std::uint8_t lo = 0x80;
  std::uint8_t hi = 0xBF;
  char32_t cp = b0 & 0x1F;
  if (b0 >= 0xF0) {
    len = 4;
    cp = b0 & 0x07;
    if (b0 == 0xF0) lo = 0x90;
    if (b0 == 0xF4) hi = 0x8F;
  } else if (b0 >= 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
    if (b0 == 0xE0) lo = 0xA0;
    if (b0 == 0xED) hi = 0x9F;
  }

  for (std::size_t k = 1; k < len; ++k) {
    if (k >= tokens.size()) return fail(Utf8ErrorKind::truncated_sequence, k);
    const std::uint8_t b = tokens[k];
    if (!is_continuation(b)) return fail(Utf8ErrorKind::invalid_continuation, k);
    if (k == 1 && (b < lo || b > hi)) return fail(Utf8ErrorKind::overlong_or_out_of_range, 1);
    cp = (cp << 6) | (b & 0x3F);
  }
  return DecodeStep{.code_point = cp, .length = len, .ok = true};
}

bool is_valid_utf8(TokenView tokens) noexcept {
  return simd::active().validate_utf8(tokens.data(), tokens.size());
}

std::vector<Utf8Diagnostic> validate_utf8(TokenView tokens, Advisories advisories) {
  std::vector<Utf8Diagnostic> out;
  if (advisories == Advisories::exclude && is_valid_utf8(tokens)) return out;

  std::size_t i = 0;
  while (i < tokens.size()) {
    const DecodeStep step = decode_one(tokens.subspan(i));
    if (!step.ok) {
      out.push_back({i, step.error, tokens[i]});
    } else if (advisories == Advisories::include && is_rare_leading_byte(tokens[i])) {
      out.push_back({i, Utf8ErrorKind::rare_leading_byte, tokens[i]});
    }
    i += step.length;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp, std::size_t index) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    if (cp >= 0xD800 && cp <= 0xDFFF) throw EncodeError(index, cp);
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp <= 0x10FFFF) {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    throw EncodeError(index, cp);
  }
}

DecodeError::DecodeError(const Utf8Diagnostic& diagnostic)
    : Error(fmt::format("invalid UTF-8: {} at offset {} (byte 0x{:02X})", to_string(diagnostic.kind),
                        diagnostic.offset, diagnostic.byte_value)),
      diagnostic_(diagnostic) {}

}  // namespace utf8tok
