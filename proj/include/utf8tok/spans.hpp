#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "utf8tok/control.hpp"
#include "utf8tok/errors.hpp"
#include "utf8tok/token_buffer.hpp"

namespace utf8tok {

/// Half-open byte range into a token stream.
struct ByteRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  friend bool operator==(const ByteRange&, const ByteRange&) = default;
};

struct Span {
  SpanKind kind = SpanKind::text;
  /// For structural kinds this includes both delimiters.
  ByteRange range;
  std::vector<Span> children;
  /// Message spans only: the role bytes between <SOH> and the first LF. The
  /// LF itself belongs to the heading and is not part of any child.
  std::optional<ByteRange> heading;

  /// Bytes strictly between the delimiters (the whole range for text).
  ByteRange interior() const noexcept {
    if (kind == SpanKind::text) return range;
    return {range.begin + 1, range.end - 1};
  }
};

/// Structural decomposition of a token stream.
struct SpanTree {
  /// Top-level spans in stream order.
  std::vector<Span> children;
  /// Trailing <NUL> run: [padding.begin, stream end).
  ByteRange padding;
};

enum class StructureErrorKind : std::uint8_t {
  /// A span was still open when a mismatched closer or the end was reached.
  unclosed,
  /// A closer with no matching opener.
  unexpected_close,
  /// A span kind that may not appear inside its parent.
  nesting,
  /// <NUL> anywhere but the trailing padding run.
  interior_padding,
};

class StructureError : public Error {
 public:
  StructureError(StructureErrorKind kind, std::size_t offset, TokenId byte_value,
                 std::optional<TokenId> expected_close = std::nullopt);

  StructureErrorKind kind() const noexcept { return kind_; }
  /// Offset of the opener for `unclosed`, of the offending byte otherwise.
  std::size_t offset() const noexcept { return offset_; }
  TokenId byte_value() const noexcept { return byte_value_; }
  std::optional<TokenId> expected_close() const noexcept { return expected_close_; }

 private:
  StructureErrorKind kind_;
  std::size_t offset_;
  TokenId byte_value_;
  std::optional<TokenId> expected_close_;
};

/// Which span kinds may appear directly inside a parent of kind `parent`.
/// Top-level spans (no parent) may be of any kind.
bool may_contain(SpanKind parent, SpanKind child) noexcept;

/// Parses the control structure of a stream. Unassigned C0 bytes and <DC1>
/// are ordinary text. Throws StructureError.
SpanTree parse_spans(TokenView tokens);

/// Rebuilds the stream from a tree: delimiters, headings and text leaves in
/// order, then padding. Inverse of `parse_spans`.
TokenBuffer reassemble(const SpanTree& tree, TokenView tokens);

class SpanKindSet {
 public:
  SpanKindSet() = default;
  SpanKindSet(std::initializer_list<SpanKind> kinds) {
    for (SpanKind k : kinds) insert(k);
  }
  void insert(SpanKind k) noexcept { bits_ |= bit(k); }
  bool contains(SpanKind k) const noexcept { return (bits_ & bit(k)) != 0; }
  bool empty() const noexcept { return bits_ == 0; }

 private:
  static std::uint32_t bit(SpanKind k) noexcept { return 1U << static_cast<unsigned>(k); }
  std::uint32_t bits_ = 0;
};

/// Removes every span of the given kinds, delimiters included.
TokenBuffer filter_spans(TokenView tokens, SpanKindSet kinds);

/// Interiors of all attention spans, ordered and disjoint.
std::vector<ByteRange> attention_segments(TokenView tokens);

}  // namespace utf8tok
