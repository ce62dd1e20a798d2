#pragma once

#include <string>
#include <string_view>

#include "utf8tok/chat.hpp"

namespace utf8tok {

// Conversation documents are JSON objects:
//
//   {
//     "messages": [
//       {"role": "user", "parts": [{"kind": "plain", "text": "Hi"}]},
//       {"role": "assistant", "attention": "never", "parts": [
//         {"kind": "thinking", "parts": [{"kind": "tool_call", "text": "{}"}]}
//       ]}
//     ],
//     "pad_to": 64
//   }
//
// "attention" ("by_role" | "always" | "never") and "pad_to" are optional.

/// Throws ChatError(schema) on malformed documents.
Conversation conversation_from_json(std::string_view json);

std::string conversation_to_json(const Conversation& conversation, int indent = 2);

}  // namespace utf8tok
