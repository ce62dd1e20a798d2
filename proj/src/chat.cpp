#include "utf8tok/chat.hpp"

#include <fmt/format.h>

#include "utf8tok/control.hpp"
#include "utf8tok/spans.hpp"

namespace utf8tok {

namespace {

constexpr std::string_view kAssistant = "assistant";
constexpr TokenId kLineFeed = 0x0A;

void check_role(std::string_view role) {
  if (role.empty()) throw ChatError(ChatErrorKind::invalid_role, "message role is empty");
  for (char c : role) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 0x20 || b > 0x7E) {
      throw ChatError(ChatErrorKind::invalid_role,
                      fmt::format("message role contains byte 0x{:02X}", b));
    }
  }
}

void append_text(TokenBuffer& out, std::string_view text) {
  out.append(as_tokens(sanitize(text, SanitizeMode::reject)));
}

void append_wrapped(TokenBuffer& out, SpanKind kind, std::string_view text) {
  out.append(wrap(kind, as_tokens(text)));
}

void render_thinking(TokenBuffer& out, const Part& thinking) {
  out.push_back(id(ControlToken::ENQ));
  for (const Part& inner : thinking.parts) {
    switch (inner.kind) {
      case PartKind::plain:
        append_text(out, inner.text);
        break;
      case PartKind::tool_call:
        append_wrapped(out, SpanKind::tool_call, inner.text);
        break;
      case PartKind::thinking:
        throw ChatError(ChatErrorKind::invalid_part, "thinking parts cannot nest");
    }
  }
  out.push_back(id(ControlToken::ACK));
}

void render_body(TokenBuffer& out, const Message& message) {
  if (message.wraps_attention()) {
    out.push_back(id(ControlToken::SO));
    for (const Part& part : message.parts) {
      if (part.kind != PartKind::plain) {
        throw ChatError(ChatErrorKind::invalid_part,
                        fmt::format("{} part in an attention-wrapped '{}' message",
                                    to_string(part.kind), message.role));
      }
      append_text(out, part.text);
    }
    out.push_back(id(ControlToken::SI));
    return;
  }
  for (const Part& part : message.parts) {
    switch (part.kind) {
      case PartKind::plain:
        append_text(out, part.text);
        break;
      case PartKind::thinking:
        render_thinking(out, part);
        break;
      case PartKind::tool_call:
        throw ChatError(ChatErrorKind::invalid_part,
                        "tool_call parts must be inside a thinking part");
    }
  }
}

std::string_view text_of(const Span& span, TokenView tokens) {
  return as_chars(tokens.subspan(span.range.begin, span.range.size()));
}

std::string_view interior_text(const Span& span, TokenView tokens) {
  const ByteRange r = span.interior();
  return as_chars(tokens.subspan(r.begin, r.size()));
}

Part parse_thinking(const Span& span, TokenView tokens) {
  Part part = Part::thinking({});
  for (const Span& child : span.children) {
    if (child.kind == SpanKind::text) {
      part.parts.push_back(Part::plain(std::string(text_of(child, tokens))));
    } else {
      part.parts.push_back(Part::tool_call(std::string(interior_text(child, tokens))));
    }
  }
  return part;
}

Message parse_message(const Span& span, TokenView tokens) {
  if (!span.heading) {
    throw ChatError(ChatErrorKind::missing_heading, "message has no LF-terminated role heading",
                    span.range.begin);
  }
  Message message;
  message.role = std::string(as_chars(tokens.subspan(span.heading->begin, span.heading->size())));
  try {
    check_role(message.role);
  } catch (const ChatError& e) {
    throw ChatError(ChatErrorKind::invalid_role, e.what(), span.heading->begin);
  }

  const bool wrapped = span.children.size() == 1 && span.children[0].kind == SpanKind::attention;
  if (wrapped) {
    const std::string_view body = interior_text(span.children[0], tokens);
    if (!body.empty()) message.parts.push_back(Part::plain(std::string(body)));
  } else {
    for (const Span& child : span.children) {
      switch (child.kind) {
        case SpanKind::text:
          message.parts.push_back(Part::plain(std::string(text_of(child, tokens))));
          break;
        case SpanKind::thinking:
          message.parts.push_back(parse_thinking(child, tokens));
          break;
        default:
          throw ChatError(ChatErrorKind::layout,
                          fmt::format("unexpected {} span in message body", to_string(child.kind)),
                          child.range.begin);
      }
    }
  }
  const bool by_role = message.role != kAssistant;
  if (wrapped != by_role) message.attention = wrapped ? AttentionWrap::always : AttentionWrap::never;
  return message;
}

void canonicalize_parts(std::vector<Part>& parts) {
  std::vector<Part> out;
  out.reserve(parts.size());
  for (Part& part : parts) {
    if (part.kind == PartKind::thinking) canonicalize_parts(part.parts);
    if (part.kind == PartKind::plain) {
      if (part.text.empty()) continue;
      if (!out.empty() && out.back().kind == PartKind::plain) {
        out.back().text += part.text;
        continue;
      }
    }
    out.push_back(std::move(part));
  }
  parts = std::move(out);
}

}  // namespace

std::string_view to_string(PartKind kind) noexcept {
  switch (kind) {
    case PartKind::plain:
      return "plain";
    case PartKind::thinking:
      return "thinking";
    case PartKind::tool_call:
      return "tool_call";
  }
  return "unknown";
}

bool Message::wraps_attention() const noexcept {
  switch (attention) {
    case AttentionWrap::always:
      return true;
    case AttentionWrap::never:
      return false;
    case AttentionWrap::by_role:
      break;
  }
  return role != kAssistant;
}

ChatError::ChatError(ChatErrorKind kind, const std::string& what, std::optional<std::size_t> offset)
    : Error(offset ? fmt::format("{} (offset {})", what, *offset) : what),
      kind_(kind),
      offset_(offset) {}

TokenBuffer apply_chat_template(const Conversation& conversation) {
  if (conversation.messages.empty()) {
    throw ChatError(ChatErrorKind::empty_conversation, "conversation has no messages");
  }
  TokenBuffer out;
  out.push_back(id(ControlToken::STX));
  for (const Message& message : conversation.messages) {
    check_role(message.role);
    out.push_back(id(ControlToken::SOH));
    out.append(as_tokens(message.role));
    out.push_back(kLineFeed);
    render_body(out, message);
    out.push_back(id(ControlToken::ETB));
  }
  out.push_back(id(ControlToken::ETX));

  if (conversation.pad_to) {
    if (*conversation.pad_to < out.size()) throw LengthError(*conversation.pad_to, out.size());
    out.resize(*conversation.pad_to, id(ControlToken::NUL));
  }
  return out;
}

std::size_t rendered_length(const Conversation& conversation) {
  Conversation unpadded = conversation;
  unpadded.pad_to.reset();
  return apply_chat_template(unpadded).size();
}

Conversation parse_chat(TokenView tokens) {
  const SpanTree tree = parse_spans(tokens);
  if (tree.children.size() != 1 || tree.children[0].kind != SpanKind::string) {
    throw ChatError(ChatErrorKind::layout, "expected a single <STX>...<ETX> string span", 0);
  }
  const Span& root = tree.children[0];

  Conversation conversation;
  for (const Span& child : root.children) {
    if (child.kind != SpanKind::message) {
      throw ChatError(ChatErrorKind::layout, "text between messages", child.range.begin);
    }
    conversation.messages.push_back(parse_message(child, tokens));
  }
  if (conversation.messages.empty()) {
    throw ChatError(ChatErrorKind::empty_conversation, "no messages", root.range.begin);
  }
  if (tree.padding.size() > 0) conversation.pad_to = tokens.size();
  return conversation;
}

Conversation canonicalize(Conversation conversation) {
  for (Message& message : conversation.messages) canonicalize_parts(message.parts);
  if (conversation.pad_to && !conversation.messages.empty() &&
      *conversation.pad_to == rendered_length(conversation)) {
    conversation.pad_to.reset();
  }
  return conversation;
}

}  // namespace utf8tok
