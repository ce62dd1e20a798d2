#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace utf8tok {

/// A token ID. The type makes IDs outside [0, 255] unrepresentable.
using TokenId = std::uint8_t;

/// Read-only, non-owning view over a token stream.
using TokenView = std::span<const TokenId>;

/// Views the bytes of a UTF-8 string as tokens without copying.
inline TokenView as_tokens(std::string_view text) noexcept {
  return {reinterpret_cast<const TokenId*>(text.data()), text.size()};
}

/// Views a token stream as raw characters without copying.
inline std::string_view as_chars(TokenView tokens) noexcept {
  return {reinterpret_cast<const char*>(tokens.data()), tokens.size()};
}

/// Owning, contiguous sequence of token IDs stored one byte per token.
class TokenBuffer {
 public:
  TokenBuffer() = default;
  TokenBuffer(std::initializer_list<TokenId> ids) : bytes_(ids) {}
  explicit TokenBuffer(TokenView ids) : bytes_(ids.begin(), ids.end()) {}
  explicit TokenBuffer(std::vector<TokenId> ids) noexcept : bytes_(std::move(ids)) {}

  std::size_t size() const noexcept { return bytes_.size(); }
  bool empty() const noexcept { return bytes_.empty(); }
  const TokenId* data() const noexcept { return bytes_.data(); }
  TokenId* data() noexcept { return bytes_.data(); }
  TokenId operator[](std::size_t i) const noexcept { return bytes_[i]; }
  TokenId& operator[](std::size_t i) noexcept { return bytes_[i]; }

  auto begin() const noexcept { return bytes_.begin(); }
  auto end() const noexcept { return bytes_.end(); }

  TokenView view() const noexcept { return {bytes_.data(), bytes_.size()}; }
  operator TokenView() const noexcept { return view(); }  // NOLINT(google-explicit-constructor)

  /// Size in bytes of the in-memory token representation.
  std::size_t storage_bytes() const noexcept { return bytes_.size() * sizeof(TokenId); }

  void push_back(TokenId id) { bytes_.push_back(id); }
  void append(TokenView ids) { bytes_.insert(bytes_.end(), ids.begin(), ids.end()); }
  void reserve(std::size_t n) { bytes_.reserve(n); }
  void resize(std::size_t n, TokenId fill = 0) { bytes_.resize(n, fill); }

  const std::vector<TokenId>& bytes() const noexcept { return bytes_; }
  std::vector<TokenId> release() && noexcept { return std::move(bytes_); }

  friend bool operator==(const TokenBuffer&, const TokenBuffer&) = default;

 private:
  std::vector<TokenId> bytes_;
};

static_assert(sizeof(TokenId) == 1);

}  // namespace utf8tok
