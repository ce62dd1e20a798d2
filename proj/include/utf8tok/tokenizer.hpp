#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "utf8tok/token_buffer.hpp"
#include "utf8tok/utf8.hpp"

namespace utf8tok {

/// Text to tokens: exactly the UTF-8 bytes of `text`, one token per byte.
/// The input is taken to already be UTF-8; no bytes are added, removed or
/// normalized. Use `validate_utf8` first if the input is untrusted.
TokenBuffer tokenize(std::string_view text);

/// Encodes a sequence of code points. Throws EncodeError on surrogates or
/// values above U+10FFFF, which have no UTF-8 encoding.
TokenBuffer tokenize(std::u32string_view text);

enum class DecodePolicy : std::uint8_t {
  /// Fail with DecodeError on the first ill-formed subsequence.
  strict,
  /// Replace each maximal ill-formed subsequence with U+FFFD.
  replace,
};

std::string detokenize(TokenView tokens, DecodePolicy policy = DecodePolicy::strict);

/// Rectangular batch of right-padded token rows.
class BatchEncoding {
 public:
  BatchEncoding(std::size_t rows, std::size_t width);

  std::size_t rows() const noexcept { return lengths_.size(); }
  std::size_t width() const noexcept { return width_; }

  /// Padded tokens of row `i` (`width()` bytes).
  TokenView tokens(std::size_t i) const noexcept { return {tokens_.data() + i * width_, width_}; }
  /// 1 for real tokens, 0 for padding.
  std::span<const std::uint8_t> attention_mask(std::size_t i) const noexcept {
    return {mask_.data() + i * width_, width_};
  }
  std::size_t original_length(std::size_t i) const noexcept { return lengths_[i]; }

  /// Row-major `rows() x width()` storage, suitable for zero-copy export.
  const std::vector<TokenId>& token_matrix() const noexcept { return tokens_; }
  const std::vector<std::uint8_t>& mask_matrix() const noexcept { return mask_; }
  const std::vector<std::size_t>& original_lengths() const noexcept { return lengths_; }

 private:
  friend BatchEncoding batch_encode(std::span<const std::string_view>, std::optional<std::size_t>);

  std::size_t width_;
  std::vector<TokenId> tokens_;
  std::vector<std::uint8_t> mask_;
  std::vector<std::size_t> lengths_;
};

/// Tokenizes every text and right-pads with <NUL> to `pad_to`, or to the
/// longest sequence when `pad_to` is empty. Throws LengthError if `pad_to` is
/// shorter than the longest sequence.
BatchEncoding batch_encode(std::span<const std::string_view> texts,
                           std::optional<std::size_t> pad_to = std::nullopt);

BatchEncoding batch_encode(const std::vector<std::string>& texts,
                           std::optional<std::size_t> pad_to = std::nullopt);

}  // namespace utf8tok
