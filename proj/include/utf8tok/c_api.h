/* C ABI for foreign-function bindings. Token arrays cross the boundary as
 * uint8_t buffers; nothing is widened. Every call returns a status code and,
 * if `status` is non-null, fills it with the error details. Buffers returned
 * through out-parameters are owned by the caller and released with the
 * matching *_free function. */

#ifndef UTF8TOK_C_API_H_
#define UTF8TOK_C_API_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  UTF8TOK_OK = 0,
  UTF8TOK_ENCODE_ERROR = 1,
  UTF8TOK_DECODE_ERROR = 2,
  UTF8TOK_LENGTH_ERROR = 3,
  UTF8TOK_SAFETY_ERROR = 4,
  UTF8TOK_STRUCTURE_ERROR = 5,
  UTF8TOK_CHAT_ERROR = 6,
  UTF8TOK_INVALID_ARGUMENT = 7,
  UTF8TOK_INTERNAL_ERROR = 8
} utf8tok_code;

typedef struct {
  utf8tok_code code;
  /* Byte offset of the problem, or SIZE_MAX when not applicable. */
  size_t offset;
  char message[256];
} utf8tok_status;

typedef struct {
  uint8_t* data;
  size_t size;
} utf8tok_bytes;

typedef struct {
  uint8_t* tokens;  /* rows x width, row-major, <NUL>-padded */
  uint8_t* mask;    /* rows x width, 1 = token, 0 = padding */
  size_t* lengths;  /* rows */
  size_t rows;
  size_t width;
} utf8tok_batch;

typedef struct {
  uint8_t pad, bos, eos;
  uint8_t message_open, message_close;
  uint8_t think_open, think_close;
  uint8_t attn_open, attn_close;
  uint8_t tool_def, tool_open, tool_close;
} utf8tok_special_ids;

utf8tok_special_ids utf8tok_get_special_ids(void);

/* Width in bytes of one token across this interface (always 1). */
size_t utf8tok_token_width(void);

utf8tok_code utf8tok_tokenize(const char* text, size_t size, utf8tok_bytes* out,
                              utf8tok_status* status);

/* policy: 0 = strict, 1 = replace. Output is UTF-8 text. */
utf8tok_code utf8tok_detokenize(const uint8_t* tokens, size_t size, int policy,
                                utf8tok_bytes* out, utf8tok_status* status);

/* pad_to < 0 pads to the longest sequence. */
utf8tok_code utf8tok_batch_encode(const char* const* texts, const size_t* sizes, size_t count,
                                  long long pad_to, utf8tok_batch* out, utf8tok_status* status);

/* `json` is a conversation document as accepted by the CLI `chat` command. */
utf8tok_code utf8tok_apply_chat_template(const char* json, size_t size, utf8tok_bytes* out,
                                         utf8tok_status* status);

utf8tok_code utf8tok_visualize(const uint8_t* tokens, size_t size, int show_whitespace,
                               int annotate, utf8tok_bytes* out, utf8tok_status* status);

void utf8tok_bytes_free(utf8tok_bytes* bytes);
void utf8tok_batch_free(utf8tok_batch* batch);

#ifdef __cplusplus
}
#endif

#endif /* UTF8TOK_C_API_H_ */
