#include "utf8tok/tokenizer.hpp"

#include <algorithm>
#include <cstring>

namespace utf8tok {

TokenBuffer tokenize(std::string_view text) { return TokenBuffer(as_tokens(text)); }

TokenBuffer tokenize(std::u32string_view text) {
  std::string bytes;
  bytes.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) append_utf8(bytes, text[i], i);
  return TokenBuffer(as_tokens(bytes));
}

std::string detokenize(TokenView tokens, DecodePolicy policy) {
  if (is_valid_utf8(tokens)) return std::string(as_chars(tokens));

  if (policy == DecodePolicy::strict) {
    std::size_t i = 0;
    while (i < tokens.size()) {
      const DecodeStep step = decode_one(tokens.subspan(i));
      if (!step.ok) throw DecodeError({i, step.error, tokens[i]});
      i += step.length;
    }
  }

  static constexpr std::string_view kReplacement = "\xEF\xBF\xBD";
  std::string out;
  out.reserve(tokens.size());
  std::size_t i = 0;
  while (i < tokens.size()) {
    const DecodeStep step = decode_one(tokens.subspan(i));
    if (step.ok) {
      out.append(as_chars(tokens.subspan(i, step.length)));
    } else {
      out.append(kReplacement);
    }
    i += step.length;
  }
  return out;
}

BatchEncoding::BatchEncoding(std::size_t rows, std::size_t width)
    : width_(width), tokens_(rows * width, 0), mask_(rows * width, 0), lengths_(rows, 0) {}

BatchEncoding batch_encode(std::span<const std::string_view> texts,
                           std::optional<std::size_t> pad_to) {
  std::size_t longest = 0;
  for (std::string_view t : texts) longest = std::max(longest, t.size());
  if (pad_to && *pad_to < longest) throw LengthError(*pad_to, longest);

  BatchEncoding batch(texts.size(), pad_to.value_or(longest));
  for (std::size_t i = 0; i < texts.size(); ++i) {
    const std::size_t n = texts[i].size();
    const std::size_t row = i * batch.width_;
    if (n != 0) std::memcpy(batch.tokens_.data() + row, texts[i].data(), n);
    std::fill_n(batch.mask_.begin() + static_cast<std::ptrdiff_t>(row), n, std::uint8_t{1});
    batch.lengths_[i] = n;
  }
  return batch;
}

BatchEncoding batch_encode(const std::vector<std::string>& texts,
                           std::optional<std::size_t> pad_to) {
  std::vector<std::string_view> views(texts.begin(), texts.end());
  return batch_encode(std::span<const std::string_view>(views), pad_to);
}

}  // namespace utf8tok
