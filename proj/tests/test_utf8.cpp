#include "utf8tok/utf8.hpp"

#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace utf8tok {
namespace {

std::vector<Utf8Diagnostic> validate(std::initializer_list<TokenId> bytes,
                                     Advisories a = Advisories::exclude) {
  const std::vector<TokenId> v(bytes);
  return validate_utf8(TokenView(v), a);
}

TEST(ValidateUtf8, Examples) {
  EXPECT_TRUE(validate({72, 105}).empty());
  EXPECT_EQ(validate({0xFF}),
            (std::vector<Utf8Diagnostic>{{0, Utf8ErrorKind::invalid_leading_byte, 0xFF}}));
  EXPECT_EQ(validate({226, 130}),
            (std::vector<Utf8Diagnostic>{{0, Utf8ErrorKind::truncated_sequence, 226}}));
}

TEST(ValidateUtf8, InvalidLeadingBytes) {
  for (unsigned b = 0xF5; b <= 0xFF; ++b) {
    const auto d = validate({static_cast<TokenId>(b)});
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0].kind, Utf8ErrorKind::invalid_leading_byte) << b;
  }
  for (unsigned b : {0xC0u, 0xC1u}) {
    // Even followed by a continuation byte (an overlong encoding).
    const auto d = validate({static_cast<TokenId>(b), 0x80});
    ASSERT_FALSE(d.empty());
    EXPECT_EQ(d[0], (Utf8Diagnostic{0, Utf8ErrorKind::invalid_leading_byte, static_cast<TokenId>(b)}));
  }
}

TEST(ValidateUtf8, OtherKinds) {
  EXPECT_EQ(validate({0x80})[0].kind, Utf8ErrorKind::invalid_continuation);
  EXPECT_EQ(validate({0xE2, 0x41, 0x41})[0],
            (Utf8Diagnostic{0, Utf8ErrorKind::invalid_continuation, 0xE2}));
  EXPECT_EQ(validate({0xE0, 0x80, 0x80})[0].kind, Utf8ErrorKind::overlong_or_out_of_range);
  EXPECT_EQ(validate({0xED, 0xA0, 0x80})[0].kind, Utf8ErrorKind::overlong_or_out_of_range);
  EXPECT_EQ(validate({0xF0, 0x80, 0x80, 0x80})[0].kind, Utf8ErrorKind::overlong_or_out_of_range);
  EXPECT_EQ(validate({0xF4, 0x90, 0x80, 0x80})[0].kind, Utf8ErrorKind::overlong_or_out_of_range);
}

TEST(ValidateUtf8, SortedAndResynchronizing) {
  const auto d = validate({'a', 0xFF, 'b', 0xE2, 0x82, 'c', 0x80});
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[0], (Utf8Diagnostic{1, Utf8ErrorKind::invalid_leading_byte, 0xFF}));
  EXPECT_EQ(d[1], (Utf8Diagnostic{3, Utf8ErrorKind::invalid_continuation, 0xE2}));
  EXPECT_EQ(d[2], (Utf8Diagnostic{6, Utf8ErrorKind::invalid_continuation, 0x80}));
}

TEST(ValidateUtf8, AdvisoriesAreOptIn) {
  // "é" starts with 0xC3, "\U00040000" with 0xF1.
  const std::string text = "\xC3\xA9 \xF1\x80\x80\x80 \xC4\x80";
  EXPECT_TRUE(validate_utf8(as_tokens(text)).empty());
  const auto d = validate_utf8(as_tokens(text), Advisories::include);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0], (Utf8Diagnostic{0, Utf8ErrorKind::rare_leading_byte, 0xC3}));
  EXPECT_EQ(d[1], (Utf8Diagnostic{3, Utf8ErrorKind::rare_leading_byte, 0xF1}));
  EXPECT_TRUE(d[0].is_advisory());
}

TEST(ValidateUtf8, AdvisoryBytesAllReported) {
  for (std::string s : {"\xC2\x80", "\xC3\x80", "\xF1\x80\x80\x80", "\xF2\x80\x80\x80",
                        "\xF4\x80\x80\x80"}) {
    const auto d = validate_utf8(as_tokens(s), Advisories::include);
    ASSERT_EQ(d.size(), 1u) << s;
    EXPECT_EQ(d[0].kind, Utf8ErrorKind::rare_leading_byte);
  }
}

// Every 1-, 2- and 3-byte sequence agrees with iconv on validity.
TEST(ValidateUtf8, ExhaustiveShortSequencesMatchIconv) {
  std::string buf;
  for (unsigned a = 0; a < 256; ++a) {
    buf.assign(1, static_cast<char>(a));
    ASSERT_EQ(validate_utf8(as_tokens(buf)).empty(), testing::oracle_is_valid_utf8(buf)) << a;
    ASSERT_EQ(is_valid_utf8(as_tokens(buf)), testing::oracle_is_valid_utf8(buf)) << a;
    for (unsigned b = 0; b < 256; ++b) {
      buf.assign({static_cast<char>(a), static_cast<char>(b)});
      ASSERT_EQ(validate_utf8(as_tokens(buf)).empty(), testing::oracle_is_valid_utf8(buf));
    }
  }
  for (unsigned a = 0xE0; a < 0x100; ++a) {
    for (unsigned b = 0x70; b < 0xD0; ++b) {
      for (unsigned c = 0x70; c < 0xD0; ++c) {
        buf.assign({static_cast<char>(a), static_cast<char>(b), static_cast<char>(c)});
        ASSERT_EQ(validate_utf8(as_tokens(buf)).empty(), testing::oracle_is_valid_utf8(buf))
            << a << " " << b << " " << c;
      }
    }
  }
}

TEST(ValidateUtf8, RandomBytesMatchIconv) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> len(0, 80);
  std::uniform_int_distribution<int> byte(0, 255);
  testing::UnicodeGenerator gen(100);
  for (int i = 0; i < 20000; ++i) {
    std::string s = testing::utf8(gen.text(40));
    // Corrupt a valid string in a few places, or not at all.
    for (int k = static_cast<int>(gen.pick(0, 2)); k > 0 && !s.empty(); --k) {
      s[static_cast<std::size_t>(gen.pick(0, static_cast<long>(s.size()) - 1))] =
          static_cast<char>(byte(rng));
    }
    if (gen.pick(0, 3) == 0 && !s.empty()) s.pop_back();
    ASSERT_EQ(validate_utf8(as_tokens(s)).empty(), testing::oracle_is_valid_utf8(s));
    ASSERT_EQ(is_valid_utf8(as_tokens(s)), testing::oracle_is_valid_utf8(s));
  }
  (void)len;
}

TEST(DecodeOne, CodePoints) {
  const std::string s = "\xF0\x9F\x98\x80";
  const DecodeStep step = decode_one(as_tokens(s));
  EXPECT_TRUE(step.ok);
  EXPECT_EQ(step.code_point, char32_t{0x1F600});
  EXPECT_EQ(step.length, 4u);
}

TEST(AppendUtf8, MatchesIconvOnAllScalarValues) {
  std::u32string all;
  for (char32_t cp = 0; cp <= 0x10FFFF; ++cp) {
    if (cp >= 0xD800 && cp <= 0xDFFF) continue;
    all.push_back(cp);
  }
  std::string mine;
  for (char32_t cp : all) append_utf8(mine, cp);
  EXPECT_EQ(mine, testing::oracle_utf8_encode(all));
}

}  // namespace
}  // namespace utf8tok
