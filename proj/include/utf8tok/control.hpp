#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "utf8tok/token_buffer.hpp"

namespace utf8tok {

/// C0 bytes with an assigned protocol role. Everything else in 0x00-0x1F and
/// 0x7F is unassigned and reserved for extensions.
enum class ControlToken : TokenId {
  NUL = 0x00,  // padding
  SOH = 0x01,  // begin message block
  STX = 0x02,  // beginning of string
  ETX = 0x03,  // end of string
  ENQ = 0x05,  // begin thinking
  ACK = 0x06,  // end thinking
  SO = 0x0E,   // begin attention block
  SI = 0x0F,   // end attention block
  DC1 = 0x11,  // tool definition
  ETB = 0x17,  // end of message block
  SUB = 0x1A,  // begin tool calling
  ESC = 0x1B,  // end tool calling
};

inline constexpr std::array<ControlToken, 12> kControlTokens = {
    ControlToken::NUL, ControlToken::SOH, ControlToken::STX, ControlToken::ETX,
    ControlToken::ENQ, ControlToken::ACK, ControlToken::SO,  ControlToken::SI,
    ControlToken::DC1, ControlToken::ETB, ControlToken::SUB, ControlToken::ESC,
};

constexpr TokenId id(ControlToken t) noexcept { return static_cast<TokenId>(t); }

std::string_view abbreviation(ControlToken t) noexcept;
std::string_view role(ControlToken t) noexcept;

/// The control token for `b`, if `b` has an assigned role.
std::optional<ControlToken> control_token(TokenId b) noexcept;

/// Mnemonic of any C0 byte or DEL ("NUL" ... "US", "DEL"); empty otherwise.
std::string_view c0_abbreviation(TokenId b) noexcept;

/// True for 0x00-0x1F except the whitespace bytes 0x09-0x0D, and for 0x7F.
/// These bytes must not occur in message content.
constexpr bool is_protocol_byte(TokenId b) noexcept {
  return b == 0x7F || (b < 0x20 && (b < 0x09 || b > 0x0D));
}

/// Drop-in special token IDs for model configs.
struct SpecialIds {
  TokenId pad = id(ControlToken::NUL);
  TokenId bos = id(ControlToken::STX);
  TokenId eos = id(ControlToken::ETX);
  TokenId message_open = id(ControlToken::SOH);
  TokenId message_close = id(ControlToken::ETB);
  TokenId think_open = id(ControlToken::ENQ);
  TokenId think_close = id(ControlToken::ACK);
  TokenId attn_open = id(ControlToken::SO);
  TokenId attn_close = id(ControlToken::SI);
  TokenId tool_def = id(ControlToken::DC1);
  TokenId tool_open = id(ControlToken::SUB);
  TokenId tool_close = id(ControlToken::ESC);
};

constexpr SpecialIds special_ids() noexcept { return {}; }

enum class SpanKind : std::uint8_t { text, string, message, thinking, attention, tool_call };

std::string_view to_string(SpanKind kind) noexcept;

struct Delimiters {
  TokenId open;
  TokenId close;
};

/// Open/close bytes of a structural span kind. `SpanKind::text` has none.
std::optional<Delimiters> delimiters(SpanKind kind) noexcept;

/// The span kind opened (or closed) by `b`, if any.
std::optional<SpanKind> opened_by(TokenId b) noexcept;
std::optional<SpanKind> closed_by(TokenId b) noexcept;

/// Offset of the first protocol byte in `content`, if any.
std::optional<std::size_t> find_protocol_byte(TokenView content) noexcept;

/// [open] ++ content ++ [close]. Throws SafetyError if `content` contains a
/// protocol byte and std::invalid_argument for `SpanKind::text`.
TokenBuffer wrap(SpanKind kind, TokenView content);

enum class SanitizeMode : std::uint8_t { reject, strip };

/// reject: returns `text` unchanged or throws SafetyError at the first
/// protocol byte. strip: removes every protocol byte.
std::string sanitize(std::string_view text, SanitizeMode mode = SanitizeMode::reject);

}  // namespace utf8tok
