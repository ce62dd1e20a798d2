#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "utf8tok/errors.hpp"
#include "utf8tok/token_buffer.hpp"

namespace utf8tok {

enum class PartKind : std::uint8_t { plain, thinking, tool_call };

std::string_view to_string(PartKind kind) noexcept;

/// A piece of message content. Plain and tool-call parts carry `text`;
/// thinking parts carry nested plain and tool-call `parts`.
struct Part {
  PartKind kind = PartKind::plain;
  std::string text;
  std::vector<Part> parts;

  static Part plain(std::string text) { return {PartKind::plain, std::move(text), {}}; }
  static Part tool_call(std::string payload) { return {PartKind::tool_call, std::move(payload), {}}; }
  static Part thinking(std::vector<Part> inner) { return {PartKind::thinking, {}, std::move(inner)}; }

  friend bool operator==(const Part&, const Part&) = default;
};

/// Whether a message body is wrapped in an attention block.
enum class AttentionWrap : std::uint8_t {
  /// Every role except "assistant" is wrapped.
  by_role,
  always,
  never,
};

struct Message {
  std::string role;
  std::vector<Part> parts;
  AttentionWrap attention = AttentionWrap::by_role;

  bool wraps_attention() const noexcept;

  friend bool operator==(const Message& a, const Message& b) {
    return a.role == b.role && a.parts == b.parts && a.wraps_attention() == b.wraps_attention();
  }
};

struct Conversation {
  std::vector<Message> messages;
  /// Total rendered length including trailing <NUL> padding.
  std::optional<std::size_t> pad_to;

  friend bool operator==(const Conversation&, const Conversation&) = default;
};

enum class ChatErrorKind : std::uint8_t {
  empty_conversation,
  invalid_role,
  invalid_part,
  missing_heading,
  layout,
  /// Malformed conversation document (see chat_json.hpp).
  schema,
};

class ChatError : public Error {
 public:
  ChatError(ChatErrorKind kind, const std::string& what, std::optional<std::size_t> offset = {});

  ChatErrorKind kind() const noexcept { return kind_; }
  /// Stream offset, for errors raised while parsing.
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ChatErrorKind kind_;
  std::optional<std::size_t> offset_;
};

/// Renders a conversation:
///
///   <STX> { <SOH> role LF body <ETB> }... <ETX> <NUL>*
///
/// An attention-wrapped body is <SO> concatenated plain text <SI>. Otherwise
/// parts are emitted in order, thinking as <ENQ>...<ACK> and tool calls as
/// <SUB>...<ESC>. Tool calls may only appear inside thinking parts.
///
/// Throws ChatError for malformed conversations, SafetyError for content
/// holding protocol bytes and LengthError if `pad_to` is too short.
TokenBuffer apply_chat_template(const Conversation& conversation);

/// Length of the rendering without padding.
std::size_t rendered_length(const Conversation& conversation);

/// Inverse of `apply_chat_template` on canonical conversations. Throws
/// StructureError or ChatError.
Conversation parse_chat(TokenView tokens);

/// The form `parse_chat` recovers: adjacent plain parts merged, empty plain
/// parts dropped, and `pad_to` cleared when it adds no padding.
Conversation canonicalize(Conversation conversation);

}  // namespace utf8tok
