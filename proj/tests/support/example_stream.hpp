#pragma once

// The three-message example conversation and its byte stream, assembled by
// hand from the grammar rather than by the renderer under test.

#include <string>
#include <vector>

#include "utf8tok/chat.hpp"

namespace utf8tok::testing {

inline constexpr const char* kThinkingLead = "The user wants me to calculate, I should call the calculator ";
inline constexpr const char* kToolPayload = R"({"type": "calculator", "expression": "1+2"})";

inline Conversation example_conversation() {
  Conversation c;
  c.messages.push_back({"system", {Part::plain("You are a helpful assistant")}});
  c.messages.push_back({"user", {Part::plain("How much is 1+2?")}});
  c.messages.push_back(
      {"assistant",
       {Part::plain("First I'll think about it.\n"),
        Part::thinking({Part::plain(kThinkingLead), Part::tool_call(kToolPayload), Part::plain("3")}),
        Part::plain("\n1 + 2 = 3")}});
  return c;
}

inline std::vector<std::uint8_t> example_stream(std::size_t padding = 4) {
  std::string s;
  s += '\x02';
  s += "\x01system\n\x0EYou are a helpful assistant\x0F\x17";
  s += "\x01user\n\x0EHow much is 1+2?\x0F\x17";
  s += "\x01" "assistant\nFirst I'll think about it.\n\x05";
  s += kThinkingLead;
  s += '\x1A';
  s += kToolPayload;
  s += "\x1B" "3\x06\n1 + 2 = 3\x17\x03";
  s.append(padding, '\0');
  return {s.begin(), s.end()};
}

}  // namespace utf8tok::testing
