#include "utf8tok/spans.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "utf8tok/simd/kernels.hpp"

namespace utf8tok {

namespace {

constexpr TokenId kLineFeed = 0x0A;

std::string_view to_string(StructureErrorKind kind) noexcept {
  switch (kind) {
    case StructureErrorKind::unclosed:
      return "unclosed span";
    case StructureErrorKind::unexpected_close:
      return "close without open";
    case StructureErrorKind::nesting:
      return "nesting violation";
    case StructureErrorKind::interior_padding:
      return "interior padding";
  }
  return "structure error";
}

std::string describe(StructureErrorKind kind, std::size_t offset, TokenId byte,
                     std::optional<TokenId> expected) {
  std::string msg = fmt::format("{} at offset {} (<{}>)", to_string(kind), offset,
                                c0_abbreviation(byte));
  if (auto k = opened_by(byte); k && kind == StructureErrorKind::unclosed) {
    msg = fmt::format("unclosed {} at offset {}", utf8tok::to_string(*k), offset);
  }
  if (expected) msg += fmt::format(", expected <{}>", c0_abbreviation(*expected));
  return msg;
}

struct Frame {
  SpanKind kind;
  std::size_t begin;
  std::vector<Span> children;
};

void flush_text(std::vector<Span>& into, std::size_t from, std::size_t to) {
  if (to > from) into.push_back(Span{SpanKind::text, {from, to}, {}, std::nullopt});
}

void check_nesting(const Span& parent, TokenView tokens) {
  for (const Span& child : parent.children) {
    if (!may_contain(parent.kind, child.kind)) {
      throw StructureError(StructureErrorKind::nesting, child.range.begin,
                           tokens[child.range.begin]);
    }
    check_nesting(child, tokens);
  }
}

// Splits "role\n..." at the front of a message into heading and body.
void split_heading(Span& message, TokenView tokens) {
  for (Span& child : message.children) split_heading(child, tokens);
  if (message.kind != SpanKind::message || message.children.empty()) return;

  Span& first = message.children.front();
  if (first.kind != SpanKind::text || first.range.begin != message.range.begin + 1) return;
  const auto text = tokens.subspan(first.range.begin, first.range.size());
  const auto lf = std::find(text.begin(), text.end(), kLineFeed);
  if (lf == text.end()) return;

  const std::size_t lf_at = first.range.begin + static_cast<std::size_t>(lf - text.begin());
  message.heading = ByteRange{first.range.begin, lf_at};
  if (lf_at + 1 == first.range.end) {
    message.children.erase(message.children.begin());
  } else {
    first.range.begin = lf_at + 1;
  }
}

void emit(const Span& span, TokenView tokens, TokenBuffer& out, const SpanKindSet* drop) {
  if (drop && drop->contains(span.kind)) return;
  if (span.kind == SpanKind::text) {
    out.append(tokens.subspan(span.range.begin, span.range.size()));
    return;
  }
  const Delimiters d = *delimiters(span.kind);
  out.push_back(d.open);
  if (span.heading) {
    out.append(tokens.subspan(span.heading->begin, span.heading->size()));
    out.push_back(kLineFeed);
  }
  for (const Span& child : span.children) emit(child, tokens, out, drop);
  out.push_back(d.close);
}

void collect_attention(const Span& span, std::vector<ByteRange>& out) {
  if (span.kind == SpanKind::attention) out.push_back(span.interior());
  for (const Span& child : span.children) collect_attention(child, out);
}

}  // namespace

StructureError::StructureError(StructureErrorKind kind, std::size_t offset, TokenId byte_value,
                               std::optional<TokenId> expected_close)
    : Error(describe(kind, offset, byte_value, expected_close)),
      kind_(kind),
      offset_(offset),
      byte_value_(byte_value),
      expected_close_(expected_close) {}

bool may_contain(SpanKind parent, SpanKind child) noexcept {
  if (child == SpanKind::text) return true;
  switch (parent) {
    case SpanKind::string:
      return child == SpanKind::message;
    case SpanKind::message:
      return child == SpanKind::attention || child == SpanKind::thinking;
    case SpanKind::thinking:
      return child == SpanKind::tool_call;
    case SpanKind::text:
    case SpanKind::attention:
    case SpanKind::tool_call:
      return false;
  }
  return false;
}

SpanTree parse_spans(TokenView tokens) {
  std::size_t content_end = tokens.size();
  while (content_end > 0 && tokens[content_end - 1] == id(ControlToken::NUL)) --content_end;

  const auto& kernels = simd::active();
  std::vector<Frame> stack;
  std::vector<Span> top;
  auto current = [&]() -> std::vector<Span>& { return stack.empty() ? top : stack.back().children; };

  std::size_t text_start = 0;
  std::size_t pos = 0;
  while (pos < content_end) {
    const std::size_t p =
        pos + kernels.find_control(tokens.data() + pos, content_end - pos,
                                   simd::ControlClass::protocol);
    if (p == content_end) break;
    const TokenId b = tokens[p];
    pos = p + 1;

    if (b == id(ControlToken::NUL)) {
      throw StructureError(StructureErrorKind::interior_padding, p, b);
    }
    if (auto kind = opened_by(b)) {
      flush_text(current(), text_start, p);
      stack.push_back(Frame{*kind, p, {}});
      text_start = pos;
      continue;
    }
    if (auto kind = closed_by(b)) {
      if (stack.empty()) throw StructureError(StructureErrorKind::unexpected_close, p, b);
      Frame& frame = stack.back();
      if (frame.kind != *kind) {
        const bool open_below = std::any_of(stack.begin(), stack.end(),
                                            [&](const Frame& f) { return f.kind == *kind; });
        if (open_below) {
          throw StructureError(StructureErrorKind::unclosed, frame.begin, tokens[frame.begin],
                               delimiters(frame.kind)->close);
        }
        throw StructureError(StructureErrorKind::unexpected_close, p, b);
      }
      flush_text(frame.children, text_start, p);
      Span span{frame.kind, {frame.begin, pos}, std::move(frame.children), std::nullopt};
      stack.pop_back();
      current().push_back(std::move(span));
      text_start = pos;
      continue;
    }
    // Unassigned C0, <DC1> and DEL pass through as text.
  }
  if (!stack.empty()) {
    const Frame& frame = stack.back();
    throw StructureError(StructureErrorKind::unclosed, frame.begin, tokens[frame.begin],
                         delimiters(frame.kind)->close);
  }
  flush_text(top, text_start, content_end);

  SpanTree tree{std::move(top), {content_end, tokens.size()}};
  for (const Span& span : tree.children) check_nesting(span, tokens);
  for (Span& span : tree.children) split_heading(span, tokens);
  return tree;
}

TokenBuffer reassemble(const SpanTree& tree, TokenView tokens) {
  TokenBuffer out;
  out.reserve(tokens.size());
  for (const Span& span : tree.children) emit(span, tokens, out, nullptr);
  out.resize(out.size() + tree.padding.size(), id(ControlToken::NUL));
  return out;
}

TokenBuffer filter_spans(TokenView tokens, SpanKindSet kinds) {
  const SpanTree tree = parse_spans(tokens);
  TokenBuffer out;
  out.reserve(tokens.size());
  for (const Span& span : tree.children) emit(span, tokens, out, &kinds);
  out.resize(out.size() + tree.padding.size(), id(ControlToken::NUL));
  return out;
}

std::vector<ByteRange> attention_segments(TokenView tokens) {
  const SpanTree tree = parse_spans(tokens);
  std::vector<ByteRange> out;
  for (const Span& span : tree.children) collect_attention(span, out);
  return out;
}

}  // namespace utf8tok
