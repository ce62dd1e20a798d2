#include "utf8tok/visualize.hpp"

#include <fmt/format.h>

#include "utf8tok/control.hpp"
#include "utf8tok/simd/kernels.hpp"
#include "utf8tok/utf8.hpp"

namespace utf8tok {

namespace {

simd::ControlClass target_class(const RenderOptions& opts) {
  return opts.show_whitespace ? simd::ControlClass::any : simd::ControlClass::protocol;
}

void append_picture(std::string& out, TokenId b, const RenderOptions& opts) {
  append_utf8(out, b == 0x7F ? char32_t{0x2421} : char32_t{0x2400} + b);
  if (opts.annotate) {
    out += '(';
    out += c0_abbreviation(b);
    out += ')';
  }
}

// Copies a run of well-formed UTF-8, picturing control bytes.
void render_valid(std::string& out, TokenView run, const RenderOptions& opts) {
  const auto& kernels = simd::active();
  const simd::ControlClass cls = target_class(opts);
  std::size_t pos = 0;
  while (pos < run.size()) {
    const std::size_t hit = pos + kernels.find_control(run.data() + pos, run.size() - pos, cls);
    out.append(as_chars(run.subspan(pos, hit - pos)));
    if (hit == run.size()) break;
    append_picture(out, run[hit], opts);
    pos = hit + 1;
  }
}

}  // namespace

std::string visualize_control_tokens(std::string_view text, RenderOptions opts) {
  return visualize_control_tokens(as_tokens(text), opts);
}

std::string visualize_control_tokens(TokenView tokens, RenderOptions opts) {
  std::string out;
  out.reserve(tokens.size() + tokens.size() / 8);
  if (is_valid_utf8(tokens)) {
    render_valid(out, tokens, opts);
    return out;
  }
  std::size_t run_start = 0;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const DecodeStep step = decode_one(tokens.subspan(i));
    if (step.ok) {
      i += step.length;
      continue;
    }
    render_valid(out, tokens.subspan(run_start, i - run_start), opts);
    for (std::size_t k = 0; k < step.length; ++k) {
      out += fmt::format("⟨" "0x{:02X}" "⟩", tokens[i + k]);
    }
    i += step.length;
    run_start = i;
  }
  render_valid(out, tokens.subspan(run_start), opts);
  return out;
}

}  // namespace utf8tok
