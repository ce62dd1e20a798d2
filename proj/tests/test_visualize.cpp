#include "utf8tok/visualize.hpp"

#include <gtest/gtest.h>

#include <set>

#include "support/oracles.hpp"

namespace utf8tok {
namespace {

TEST(Visualize, Examples) {
  EXPECT_EQ(visualize_control_tokens("\x02Hi\x03"), "␂Hi␃");
  EXPECT_EQ(visualize_control_tokens("a\tb"), "a\tb");
  EXPECT_EQ(visualize_control_tokens("\x7F"), "␡");
}

TEST(Visualize, ShowWhitespace) {
  const RenderOptions opts{.show_whitespace = true};
  EXPECT_EQ(visualize_control_tokens("a\tb\n", opts), "a␉b␊");
  EXPECT_EQ(visualize_control_tokens("\r\x0B\x0C", opts), "␍␋␌");
}

TEST(Visualize, Annotate) {
  const RenderOptions opts{.annotate = true};
  EXPECT_EQ(visualize_control_tokens("\x02x\x17", opts), "␂(STX)x␗(ETB)");
  EXPECT_EQ(visualize_control_tokens(std::string_view("\0", 1), opts), "␀(NUL)");
}

TEST(Visualize, InvalidBytesAsHex) {
  const std::vector<TokenId> v{'a', 0xFF, 0x02, 0xE2, 0x82};
  EXPECT_EQ(visualize_control_tokens(TokenView(v)), "a⟨0xFF⟩␂⟨0xE2⟩⟨0x82⟩");
}

TEST(Visualize, IdentityOnControlFreeText) {
  testing::UnicodeGenerator gen(55);
  for (int i = 0; i < 2000; ++i) {
    const std::string s = testing::utf8(gen.clean_text(50));
    ASSERT_EQ(visualize_control_tokens(s), s);
  }
}

TEST(Visualize, PicturesAreDistinct) {
  std::set<std::string> pictures;
  for (unsigned b = 0; b < 0x20; ++b) {
    pictures.insert(visualize_control_tokens(std::string(1, static_cast<char>(b)),
                                             RenderOptions{.show_whitespace = true}));
  }
  pictures.insert(visualize_control_tokens("\x7F"));
  EXPECT_EQ(pictures.size(), 33u);
  for (const std::string& p : pictures) {
    const auto decoded = testing::oracle_utf8_decode(p);
    ASSERT_TRUE(decoded);
    ASSERT_EQ(decoded->size(), 1u);
    EXPECT_GE((*decoded)[0], char32_t{0x2400});
    EXPECT_LE((*decoded)[0], char32_t{0x2421});
  }
}

TEST(Visualize, SourceUnchanged) {
  const std::string source = "\x02\x01user\n\x0EHi\x0F\x17\x03";
  const std::string copy = source;
  (void)visualize_control_tokens(source, RenderOptions{true, true});
  EXPECT_EQ(source, copy);
}

}  // namespace
}  // namespace utf8tok
