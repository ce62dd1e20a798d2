#pragma once

#include <string>
#include <string_view>

#include "utf8tok/token_buffer.hpp"

namespace utf8tok {

struct RenderOptions {
  /// Also picture the whitespace bytes 0x09-0x0D.
  bool show_whitespace = false;
  /// Follow each picture with its mnemonic, e.g. "␂(STX)".
  bool annotate = false;
};

/// Replaces C0 controls with Unicode Control Pictures (U+2400 + byte, DEL as
/// U+2421) for display. All other characters are copied through.
std::string visualize_control_tokens(std::string_view text, RenderOptions opts = {});

/// Same, for raw tokens. Bytes that are not part of a well-formed UTF-8
/// sequence are shown as ⟨0xHH⟩ instead of failing.
std::string visualize_control_tokens(TokenView tokens, RenderOptions opts = {});

}  // namespace utf8tok
