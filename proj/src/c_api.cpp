#include "utf8tok/c_api.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "utf8tok/chat.hpp"
#include "utf8tok/chat_json.hpp"
#include "utf8tok/control.hpp"
#include "utf8tok/spans.hpp"
#include "utf8tok/tokenizer.hpp"
#include "utf8tok/visualize.hpp"

namespace {

using namespace utf8tok;

void set_status(utf8tok_status* status, utf8tok_code code, std::size_t offset, const char* what) {
  if (status == nullptr) return;
  status->code = code;
  status->offset = offset;
  std::strncpy(status->message, what, sizeof(status->message) - 1);
  status->message[sizeof(status->message) - 1] = '\0';
}

template <typename F>
utf8tok_code guarded(utf8tok_status* status, F&& body) {
  try {
    body();
    set_status(status, UTF8TOK_OK, SIZE_MAX, "");
    return UTF8TOK_OK;
  } catch (const EncodeError& e) {
    set_status(status, UTF8TOK_ENCODE_ERROR, e.index(), e.what());
    return UTF8TOK_ENCODE_ERROR;
  } catch (const DecodeError& e) {
    set_status(status, UTF8TOK_DECODE_ERROR, e.diagnostic().offset, e.what());
    return UTF8TOK_DECODE_ERROR;
  } catch (const LengthError& e) {
    set_status(status, UTF8TOK_LENGTH_ERROR, e.required(), e.what());
    return UTF8TOK_LENGTH_ERROR;
  } catch (const SafetyError& e) {
    set_status(status, UTF8TOK_SAFETY_ERROR, e.offset(), e.what());
    return UTF8TOK_SAFETY_ERROR;
  } catch (const StructureError& e) {
    set_status(status, UTF8TOK_STRUCTURE_ERROR, e.offset(), e.what());
    return UTF8TOK_STRUCTURE_ERROR;
  } catch (const ChatError& e) {
    set_status(status, UTF8TOK_CHAT_ERROR, e.offset().value_or(SIZE_MAX), e.what());
    return UTF8TOK_CHAT_ERROR;
  } catch (const std::invalid_argument& e) {
    set_status(status, UTF8TOK_INVALID_ARGUMENT, SIZE_MAX, e.what());
    return UTF8TOK_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_status(status, UTF8TOK_INTERNAL_ERROR, SIZE_MAX, e.what());
    return UTF8TOK_INTERNAL_ERROR;
  }
}

template <typename T>
T* copy_out(const T* src, std::size_t n) {
  auto* p = static_cast<T*>(std::malloc(n == 0 ? 1 : n * sizeof(T)));
  if (p == nullptr) throw std::bad_alloc();
  if (n != 0) std::memcpy(p, src, n * sizeof(T));
  return p;
}

void give(utf8tok_bytes* out, const void* data, std::size_t size) {
  out->data = copy_out(static_cast<const std::uint8_t*>(data), size);
  out->size = size;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw std::invalid_argument(what);
}

}  // namespace

extern "C" {

utf8tok_special_ids utf8tok_get_special_ids(void) {
  constexpr SpecialIds ids = special_ids();
  return {ids.pad,        ids.bos,         ids.eos,       ids.message_open,
          ids.message_close, ids.think_open, ids.think_close, ids.attn_open,
          ids.attn_close, ids.tool_def,    ids.tool_open, ids.tool_close};
}

size_t utf8tok_token_width(void) { return sizeof(TokenId); }

utf8tok_code utf8tok_tokenize(const char* text, size_t size, utf8tok_bytes* out,
                              utf8tok_status* status) {
  return guarded(status, [&] {
    require(out, "out is null");
    if (size != 0) require(text, "text is null");
    const TokenBuffer tokens = tokenize(std::string_view(text == nullptr ? "" : text, size));
    give(out, tokens.data(), tokens.size());
  });
}

utf8tok_code utf8tok_detokenize(const uint8_t* tokens, size_t size, int policy,
                                utf8tok_bytes* out, utf8tok_status* status) {
  return guarded(status, [&] {
    require(out, "out is null");
    if (size != 0) require(tokens, "tokens is null");
    if (policy != 0 && policy != 1) throw std::invalid_argument("policy must be 0 or 1");
    const std::string text = detokenize(TokenView(tokens, size),
                                        policy == 0 ? DecodePolicy::strict : DecodePolicy::replace);
    give(out, text.data(), text.size());
  });
}

utf8tok_code utf8tok_batch_encode(const char* const* texts, const size_t* sizes, size_t count,
                                  long long pad_to, utf8tok_batch* out, utf8tok_status* status) {
  return guarded(status, [&] {
    require(out, "out is null");
    if (count != 0) {
      require(texts, "texts is null");
      require(sizes, "sizes is null");
    }
    std::vector<std::string_view> views;
    views.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      if (sizes[i] != 0) require(texts[i], "text is null");
      views.emplace_back(texts[i] == nullptr ? "" : texts[i], sizes[i]);
    }
    std::optional<std::size_t> pad;
    if (pad_to >= 0) pad = static_cast<std::size_t>(pad_to);
    const BatchEncoding batch = batch_encode(std::span<const std::string_view>(views), pad);

    utf8tok_batch result{};
    result.rows = batch.rows();
    result.width = batch.width();
    result.tokens = copy_out(batch.token_matrix().data(), batch.token_matrix().size());
    result.mask = copy_out(batch.mask_matrix().data(), batch.mask_matrix().size());
    result.lengths = copy_out(batch.original_lengths().data(), batch.original_lengths().size());
    *out = result;
  });
}

utf8tok_code utf8tok_apply_chat_template(const char* json, size_t size, utf8tok_bytes* out,
                                         utf8tok_status* status) {
  return guarded(status, [&] {
    require(out, "out is null");
    require(json, "json is null");
    const TokenBuffer tokens = apply_chat_template(conversation_from_json({json, size}));
    give(out, tokens.data(), tokens.size());
  });
}

utf8tok_code utf8tok_visualize(const uint8_t* tokens, size_t size, int show_whitespace,
                               int annotate, utf8tok_bytes* out, utf8tok_status* status) {
  return guarded(status, [&] {
    require(out, "out is null");
    if (size != 0) require(tokens, "tokens is null");
    const std::string text = visualize_control_tokens(
        TokenView(tokens, size), RenderOptions{show_whitespace != 0, annotate != 0});
    give(out, text.data(), text.size());
  });
}

void utf8tok_bytes_free(utf8tok_bytes* bytes) {
  if (bytes == nullptr) return;
  std::free(bytes->data);
  bytes->data = nullptr;
  bytes->size = 0;
}

void utf8tok_batch_free(utf8tok_batch* batch) {
  if (batch == nullptr) return;
  std::free(batch->tokens);
  std::free(batch->mask);
  std::free(batch->lengths);
  *batch = utf8tok_batch{};
}

}  // extern "C"
