#pragma once

// Test-only reference implementations and random generators. Nothing here
// calls into the library code paths it is used to check.

#include <iconv.h>

#include <bitset>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "utf8tok/chat.hpp"

namespace utf8tok::testing {

/// glibc iconv, strict in both directions. Returns nullopt on failure.
inline std::optional<std::string> iconv_convert(const char* to, const char* from,
                                                const std::string& input) {
  iconv_t cd = iconv_open(to, from);
  if (cd == reinterpret_cast<iconv_t>(-1)) return std::nullopt;
  std::string out(input.size() * 4 + 16, '\0');
  char* in_ptr = const_cast<char*>(input.data());
  std::size_t in_left = input.size();
  char* out_ptr = out.data();
  std::size_t out_left = out.size();
  const std::size_t rc = iconv(cd, &in_ptr, &in_left, &out_ptr, &out_left);
  iconv_close(cd);
  if (rc == static_cast<std::size_t>(-1) || in_left != 0) return std::nullopt;
  out.resize(out.size() - out_left);
  return out;
}

inline std::optional<std::string> oracle_utf8_encode(const std::u32string& text) {
  const std::string raw(reinterpret_cast<const char*>(text.data()), text.size() * 4);
  return iconv_convert("UTF-8", "UTF-32LE", raw);
}

inline std::optional<std::u32string> oracle_utf8_decode(const std::string& bytes) {
  auto raw = iconv_convert("UTF-32LE", "UTF-8", bytes);
  if (!raw) return std::nullopt;
  return std::u32string(reinterpret_cast<const char32_t*>(raw->data()), raw->size() / 4);
}

inline bool oracle_is_valid_utf8(const std::string& bytes) {
  return oracle_utf8_decode(bytes).has_value();
}

inline std::vector<std::uint8_t> to_vec(const std::string& s) { return {s.begin(), s.end()}; }

/// MSB-first bits through std::bitset's textual form.
inline std::vector<int> oracle_bits(unsigned value) {
  const std::string text = std::bitset<8>(value).to_string();
  std::vector<int> out;
  for (char c : text) out.push_back(c == '1' ? 1 : 0);
  return out;
}

/// Random Unicode scalar values drawn from ASCII, Latin-1, the BMP, every
/// supplementary plane, combining marks and emoji sequences.
class UnicodeGenerator {
 public:
  explicit UnicodeGenerator(std::uint64_t seed) : rng_(seed) {}

  char32_t code_point() {
    switch (pick(0, 7)) {
      case 0:
        return static_cast<char32_t>(pick(0x00, 0x7F));
      case 1:
        return static_cast<char32_t>(pick(0x80, 0x7FF));
      case 2: {
        char32_t cp;
        do cp = static_cast<char32_t>(pick(0x800, 0xFFFF));
        while (cp >= 0xD800 && cp <= 0xDFFF);
        return cp;
      }
      case 3:
        return static_cast<char32_t>(pick(0x10000, 0x10FFFF));
      case 4:
        return static_cast<char32_t>(pick(0x0300, 0x036F));
      case 5:
        return static_cast<char32_t>(pick(0x1F300, 0x1FAFF));
      case 6:
        return pick(0, 1) ? char32_t{0x200D} : char32_t{0xFE0F};
      default:
        return static_cast<char32_t>(pick(0x4E00, 0x9FFF));
    }
  }

  std::u32string text(std::size_t max_len) {
    std::u32string s;
    const auto n = static_cast<std::size_t>(pick(0, static_cast<long>(max_len)));
    for (std::size_t i = 0; i < n; ++i) s.push_back(code_point());
    return s;
  }

  /// Text with no protocol control code points.
  std::u32string clean_text(std::size_t max_len) {
    std::u32string s = text(max_len);
    std::erase_if(s, [](char32_t c) { return c == 0x7F || (c < 0x20 && (c < 0x09 || c > 0x0D)); });
    return s;
  }

  long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline std::string utf8(const std::u32string& s) { return *oracle_utf8_encode(s); }

/// 2 + sum over messages of (2 + |role| + 1 + |body|), computed from the
/// parts directly rather than by rendering.
inline std::size_t oracle_rendered_length(const Conversation& c) {
  std::size_t total = 2;
  for (const Message& m : c.messages) {
    std::size_t body = m.wraps_attention() ? 2 : 0;
    for (const Part& p : m.parts) {
      if (p.kind == PartKind::plain) body += p.text.size();
      if (p.kind == PartKind::thinking) {
        body += 2;
        for (const Part& q : p.parts) {
          body += q.text.size() + (q.kind == PartKind::tool_call ? 2 : 0);
        }
      }
    }
    total += 2 + m.role.size() + 1 + body;
  }
  return total;
}

/// Random canonical conversation: no empty or adjacent plain parts, tool
/// calls only inside thinking, attention-wrapped messages hold plain text.
inline Conversation random_conversation(UnicodeGenerator& gen) {
  static const char* kRoles[] = {"system", "user", "assistant", "tool", "critic 2"};
  Conversation c;
  const long n = gen.pick(1, 5);
  auto plain = [&] {
    std::string t;
    while (t.empty()) t = utf8(gen.clean_text(24));
    return Part::plain(t);
  };
  for (long i = 0; i < n; ++i) {
    Message m;
    m.role = kRoles[gen.pick(0, 4)];
    switch (gen.pick(0, 3)) {
      case 0:
        m.attention = AttentionWrap::always;
        break;
      case 1:
        m.attention = AttentionWrap::never;
        break;
      default:
        break;
    }
    const long parts = gen.pick(0, 4);
    for (long p = 0; p < parts; ++p) {
      const bool after_plain = !m.parts.empty() && m.parts.back().kind == PartKind::plain;
      if (m.wraps_attention()) {
        if (m.parts.empty()) m.parts.push_back(plain());
        continue;
      }
      if (after_plain || gen.pick(0, 1) == 0) {
        Part think = Part::thinking({});
        const long inner = gen.pick(0, 3);
        for (long q = 0; q < inner; ++q) {
          const bool inner_after_plain =
              !think.parts.empty() && think.parts.back().kind == PartKind::plain;
          if (inner_after_plain || gen.pick(0, 1) == 0) {
            think.parts.push_back(Part::tool_call(utf8(gen.clean_text(16))));
          } else {
            think.parts.push_back(plain());
          }
        }
        m.parts.push_back(std::move(think));
      } else {
        m.parts.push_back(plain());
      }
    }
    c.messages.push_back(std::move(m));
  }
  if (gen.pick(0, 1) == 0) {
    c.pad_to = oracle_rendered_length(c) + static_cast<std::size_t>(gen.pick(1, 16));
  }
  return c;
}

}  // namespace utf8tok::testing
