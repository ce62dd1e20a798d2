#include "utf8tok/errors.hpp"

#include <fmt/format.h>

namespace utf8tok {

EncodeError::EncodeError(std::size_t index, char32_t code_point)
    : Error(fmt::format("code point U+{:04X} at index {} has no UTF-8 encoding",
                        static_cast<std::uint32_t>(code_point), index)),
      index_(index),
      code_point_(code_point) {}

LengthError::LengthError(std::size_t requested, std::size_t required)
    : Error(fmt::format("requested length {} is shorter than required length {}", requested,
                        required)),
      requested_(requested),
      required_(required) {}

SafetyError::SafetyError(std::size_t offset, std::uint8_t byte_value)
    : Error(fmt::format("protocol control byte 0x{:02X} at offset {} in content", byte_value,
                        offset)),
      offset_(offset),
      byte_value_(byte_value) {}

}  // namespace utf8tok
