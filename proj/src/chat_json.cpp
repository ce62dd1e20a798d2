#include "utf8tok/chat_json.hpp"

#include <json.hpp>

namespace utf8tok {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& what) {
  throw ChatError(ChatErrorKind::schema, "conversation document: " + what);
}

const json& require(const json& obj, const char* key, json::value_t type) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(std::string("missing \"") + key + "\"");
  if (it->type() != type) schema_error(std::string("\"") + key + "\" has the wrong type");
  return *it;
}

Part part_from_json(const json& j) {
  if (!j.is_object()) schema_error("part is not an object");
  const std::string kind = require(j, "kind", json::value_t::string).get<std::string>();
  if (kind == "plain" || kind == "tool_call") {
    std::string text = require(j, "text", json::value_t::string).get<std::string>();
    return kind == "plain" ? Part::plain(std::move(text)) : Part::tool_call(std::move(text));
  }
  if (kind == "thinking") {
    std::vector<Part> inner;
    for (const json& p : require(j, "parts", json::value_t::array)) inner.push_back(part_from_json(p));
    return Part::thinking(std::move(inner));
  }
  schema_error("unknown part kind \"" + kind + "\"");
}

json part_to_json(const Part& part) {
  json j{{"kind", std::string(to_string(part.kind))}};
  if (part.kind == PartKind::thinking) {
    json inner = json::array();
    for (const Part& p : part.parts) inner.push_back(part_to_json(p));
    j["parts"] = std::move(inner);
  } else {
    j["text"] = part.text;
  }
  return j;
}

AttentionWrap attention_from_string(const std::string& s) {
  if (s == "by_role") return AttentionWrap::by_role;
  if (s == "always") return AttentionWrap::always;
  if (s == "never") return AttentionWrap::never;
  schema_error("unknown attention mode \"" + s + "\"");
}

std::string_view to_string(AttentionWrap a) {
  switch (a) {
    case AttentionWrap::by_role:
      return "by_role";
    case AttentionWrap::always:
      return "always";
    case AttentionWrap::never:
      return "never";
  }
  return "by_role";
}

}  // namespace

Conversation conversation_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    schema_error(e.what());
  }
  if (!doc.is_object()) schema_error("top level is not an object");

  Conversation conversation;
  for (const json& m : require(doc, "messages", json::value_t::array)) {
    if (!m.is_object()) schema_error("message is not an object");
    Message message;
    message.role = require(m, "role", json::value_t::string).get<std::string>();
    for (const json& p : require(m, "parts", json::value_t::array)) {
      message.parts.push_back(part_from_json(p));
    }
    if (m.contains("attention")) {
      message.attention =
          attention_from_string(require(m, "attention", json::value_t::string).get<std::string>());
    }
    conversation.messages.push_back(std::move(message));
  }
  if (doc.contains("pad_to")) {
    const json& pad = doc["pad_to"];
    if (!pad.is_number_unsigned()) schema_error("\"pad_to\" must be a non-negative integer");
    conversation.pad_to = pad.get<std::size_t>();
  }
  return conversation;
}

std::string conversation_to_json(const Conversation& conversation, int indent) {
  json messages = json::array();
  for (const Message& message : conversation.messages) {
    json parts = json::array();
    for (const Part& p : message.parts) parts.push_back(part_to_json(p));
    json m{{"role", message.role}, {"parts", std::move(parts)}};
    if (message.attention != AttentionWrap::by_role) {
      m["attention"] = std::string(to_string(message.attention));
    }
    messages.push_back(std::move(m));
  }
  json doc{{"messages", std::move(messages)}};
  if (conversation.pad_to) doc["pad_to"] = *conversation.pad_to;
  try {
    return doc.dump(indent);
  } catch (const json::type_error& e) {
    schema_error(e.what());
  }
}

}  // namespace utf8tok
