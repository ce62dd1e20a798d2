#include "utf8tok/c_api.h"

#include <gtest/gtest.h>

#include <cstring>

#include "support/oracles.hpp"
#include "utf8tok/chat.hpp"
#include "utf8tok/chat_json.hpp"
#include "utf8tok/control.hpp"
#include "utf8tok/tokenizer.hpp"

namespace utf8tok {
namespace {

std::vector<std::uint8_t> take(utf8tok_bytes& b) {
  std::vector<std::uint8_t> out(b.data, b.data + b.size);
  utf8tok_bytes_free(&b);
  return out;
}

TEST(CApi, SpecialIdsAndWidth) {
  const utf8tok_special_ids ids = utf8tok_get_special_ids();
  const SpecialIds core = special_ids();
  EXPECT_EQ(ids.pad, core.pad);
  EXPECT_EQ(ids.bos, core.bos);
  EXPECT_EQ(ids.eos, core.eos);
  EXPECT_EQ(ids.message_close, core.message_close);
  EXPECT_EQ(ids.tool_close, core.tool_close);
  EXPECT_EQ(utf8tok_token_width(), 1u);
  EXPECT_EQ(sizeof(*utf8tok_bytes{}.data), 1u);
}

TEST(CApi, DifferentialTokenize) {
  testing::UnicodeGenerator gen(1000);
  for (int i = 0; i < 1000; ++i) {
    const std::string s = testing::utf8(gen.text(40));
    utf8tok_bytes out{};
    ASSERT_EQ(utf8tok_tokenize(s.data(), s.size(), &out, nullptr), UTF8TOK_OK);
    const auto bytes = take(out);
    ASSERT_EQ(bytes, tokenize(s).bytes());

    utf8tok_bytes text{};
    ASSERT_EQ(utf8tok_detokenize(bytes.data(), bytes.size(), 0, &text, nullptr), UTF8TOK_OK);
    const auto back = take(text);
    ASSERT_EQ(std::string(back.begin(), back.end()), s);
  }
}

TEST(CApi, Errors) {
  utf8tok_status status{};
  utf8tok_bytes out{};
  const std::uint8_t bad[] = {'o', 'k', 0xF5};
  EXPECT_EQ(utf8tok_detokenize(bad, 3, 0, &out, &status), UTF8TOK_DECODE_ERROR);
  EXPECT_EQ(status.code, UTF8TOK_DECODE_ERROR);
  EXPECT_EQ(status.offset, 2u);
  EXPECT_GT(std::strlen(status.message), 0u);

  EXPECT_EQ(utf8tok_detokenize(bad, 3, 7, &out, &status), UTF8TOK_INVALID_ARGUMENT);
  EXPECT_EQ(utf8tok_tokenize("x", 1, nullptr, &status), UTF8TOK_INVALID_ARGUMENT);

  ASSERT_EQ(utf8tok_detokenize(bad, 3, 1, &out, &status), UTF8TOK_OK);
  EXPECT_EQ(take(out), testing::to_vec("ok\xEF\xBF\xBD"));
}

TEST(CApi, BatchEncode) {
  const char* texts[] = {"A", "AB"};
  const size_t sizes[] = {1, 2};
  utf8tok_batch batch{};
  ASSERT_EQ(utf8tok_batch_encode(texts, sizes, 2, -1, &batch, nullptr), UTF8TOK_OK);
  EXPECT_EQ(batch.rows, 2u);
  EXPECT_EQ(batch.width, 2u);
  EXPECT_EQ(std::vector<std::uint8_t>(batch.tokens, batch.tokens + 4),
            (std::vector<std::uint8_t>{65, 0, 65, 66}));
  EXPECT_EQ(std::vector<std::uint8_t>(batch.mask, batch.mask + 4),
            (std::vector<std::uint8_t>{1, 0, 1, 1}));
  EXPECT_EQ(batch.lengths[1], 2u);
  utf8tok_batch_free(&batch);

  utf8tok_status status{};
  EXPECT_EQ(utf8tok_batch_encode(texts, sizes, 2, 1, &batch, &status), UTF8TOK_LENGTH_ERROR);
}

TEST(CApi, ChatAndVisualize) {
  testing::UnicodeGenerator gen(1001);
  for (int i = 0; i < 200; ++i) {
    const Conversation c = testing::random_conversation(gen);
    const std::string json = conversation_to_json(c);
    utf8tok_bytes out{};
    ASSERT_EQ(utf8tok_apply_chat_template(json.data(), json.size(), &out, nullptr), UTF8TOK_OK);
    ASSERT_EQ(take(out), apply_chat_template(c).bytes());
  }
  utf8tok_status status{};
  utf8tok_bytes out{};
  const std::string empty = R"({"messages": []})";
  EXPECT_EQ(utf8tok_apply_chat_template(empty.data(), empty.size(), &out, &status),
            UTF8TOK_CHAT_ERROR);

  const std::uint8_t stream[] = {2, 'H', 3};
  ASSERT_EQ(utf8tok_visualize(stream, 3, 0, 1, &out, nullptr), UTF8TOK_OK);
  EXPECT_EQ(take(out), testing::to_vec("␂(STX)H␃(ETX)"));
}

}  // namespace
}  // namespace utf8tok
