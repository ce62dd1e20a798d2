#include "utf8tok/control.hpp"

#include <stdexcept>

#include "utf8tok/errors.hpp"
#include "utf8tok/simd/kernels.hpp"

namespace utf8tok {

std::string_view abbreviation(ControlToken t) noexcept { return c0_abbreviation(id(t)); }

std::string_view role(ControlToken t) noexcept {
  switch (t) {
    case ControlToken::NUL:
      return "Padding";
    case ControlToken::SOH:
      return "Begin message block";
    case ControlToken::STX:
      return "Beginning of string";
    case ControlToken::ETX:
      return "End of string";
    case ControlToken::ENQ:
      return "Begin thinking";
    case ControlToken::ACK:
      return "End thinking";
    case ControlToken::SO:
      return "Begin attention block";
    case ControlToken::SI:
      return "End attention block";
    case ControlToken::DC1:
      return "Tool Definition";
    case ControlToken::ETB:
      return "End of message block";
    case ControlToken::SUB:
      return "Begin tool calling";
    case ControlToken::ESC:
      return "End tool calling";
  }
  return {};
}

std::optional<ControlToken> control_token(TokenId b) noexcept {
  for (ControlToken t : kControlTokens) {
    if (id(t) == b) return t;
  }
  return std::nullopt;
}

std::string_view c0_abbreviation(TokenId b) noexcept {
  static constexpr std::string_view kNames[32] = {
      "NUL", "SOH", "STX", "ETX", "EOT", "ENQ", "ACK", "BEL", "BS",  "HT",  "LF",
      "VT",  "FF",  "CR",  "SO",  "SI",  "DLE", "DC1", "DC2", "DC3", "DC4", "NAK",
      "SYN", "ETB", "CAN", "EM",  "SUB", "ESC", "FS",  "GS",  "RS",  "US",
  };
  if (b < 0x20) return kNames[b];
  if (b == 0x7F) return "DEL";
  return {};
}

std::string_view to_string(SpanKind kind) noexcept {
  switch (kind) {
    case SpanKind::text:
      return "text";
    case SpanKind::string:
      return "string";
    case SpanKind::message:
      return "message";
    case SpanKind::thinking:
      return "thinking";
    case SpanKind::attention:
      return "attention";
    case SpanKind::tool_call:
      return "tool_call";
  }
  return "unknown";
}

std::optional<Delimiters> delimiters(SpanKind kind) noexcept {
  switch (kind) {
    case SpanKind::text:
      return std::nullopt;
    case SpanKind::string:
      return Delimiters{id(ControlToken::STX), id(ControlToken::ETX)};
    case SpanKind::message:
      return Delimiters{id(ControlToken::SOH), id(ControlToken::ETB)};
    case SpanKind::thinking:
      return Delimiters{id(ControlToken::ENQ), id(ControlToken::ACK)};
    case SpanKind::attention:
      return Delimiters{id(ControlToken::SO), id(ControlToken::SI)};
    case SpanKind::tool_call:
      return Delimiters{id(ControlToken::SUB), id(ControlToken::ESC)};
  }
  return std::nullopt;
}

namespace {
constexpr SpanKind kStructural[] = {SpanKind::string, SpanKind::message, SpanKind::thinking,
                                    SpanKind::attention, SpanKind::tool_call};
}

std::optional<SpanKind> opened_by(TokenId b) noexcept {
  for (SpanKind k : kStructural) {
    if (delimiters(k)->open == b) return k;
  }
  return std::nullopt;
}

std::optional<SpanKind> closed_by(TokenId b) noexcept {
  for (SpanKind k : kStructural) {
    if (delimiters(k)->close == b) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> find_protocol_byte(TokenView content) noexcept {
  const std::size_t at = simd::active().find_control(content.data(), content.size(),
                                                     simd::ControlClass::protocol);
  if (at == content.size()) return std::nullopt;
  return at;
}

TokenBuffer wrap(SpanKind kind, TokenView content) {
  const auto delims = delimiters(kind);
  if (!delims) throw std::invalid_argument("text spans have no delimiters");
  if (auto at = find_protocol_byte(content)) throw SafetyError(*at, content[*at]);

  TokenBuffer out;
  out.reserve(content.size() + 2);
  out.push_back(delims->open);
  out.append(content);
  out.push_back(delims->close);
  return out;
}

std::string sanitize(std::string_view text, SanitizeMode mode) {
  const TokenView bytes = as_tokens(text);
  auto at = find_protocol_byte(bytes);
  if (!at) return std::string(text);
  if (mode == SanitizeMode::reject) throw SafetyError(*at, bytes[*at]);

  std::string out;
  out.reserve(text.size());
  std::size_t from = 0;
  while (at) {
    out.append(text.substr(from, *at - from));
    from = *at + 1;
    const auto rest = find_protocol_byte(bytes.subspan(from));
    at = rest ? std::optional<std::size_t>(from + *rest) : std::nullopt;
  }
  out.append(text.substr(from));
  return out;
}

}  // namespace utf8tok
