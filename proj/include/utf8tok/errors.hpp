#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace utf8tok {

/// Base class for every error raised by the library. The CLI maps
/// `IoError` to exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A code point that has no UTF-8 encoding (surrogate or > U+10FFFF).
class EncodeError : public Error {
 public:
  EncodeError(std::size_t index, char32_t code_point);

  std::size_t index() const noexcept { return index_; }
  char32_t code_point() const noexcept { return code_point_; }

 private:
  std::size_t index_;
  char32_t code_point_;
};

/// Requested length is shorter than the content it must hold.
class LengthError : public Error {
 public:
  LengthError(std::size_t requested, std::size_t required);

  std::size_t requested() const noexcept { return requested_; }
  std::size_t required() const noexcept { return required_; }

 private:
  std::size_t requested_;
  std::size_t required_;
};

/// Content contains a protocol control byte where only text is allowed.
class SafetyError : public Error {
 public:
  SafetyError(std::size_t offset, std::uint8_t byte_value);

  std::size_t offset() const noexcept { return offset_; }
  std::uint8_t byte_value() const noexcept { return byte_value_; }

 private:
  std::size_t offset_;
  std::uint8_t byte_value_;
};

/// Matrix shapes that do not agree, or a malformed matrix.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace utf8tok
