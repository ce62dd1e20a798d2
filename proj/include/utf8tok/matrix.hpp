#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace utf8tok {

/// Dense row-major float32 matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0f) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<float> data);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::span<float> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const float> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }
  float& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  float operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  const float* data() const noexcept { return data_.data(); }
  float* data() noexcept { return data_.data(); }
  const std::vector<float>& values() const noexcept { return data_; }

  bool all_finite() const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<float> data_;
};

// Binary matrix format, little-endian:
//   u32 rows, u32 cols, rows * cols float32 values in row-major order.
// Files carry no other header or trailer.

std::vector<std::uint8_t> encode_matrix(const Matrix& m);

/// Throws ShapeError if the payload size disagrees with the header.
Matrix decode_matrix(std::span<const std::uint8_t> bytes);

/// Throws IoError if the file cannot be read, ShapeError if it is malformed.
Matrix read_matrix(const std::filesystem::path& path);
void write_matrix(const std::filesystem::path& path, const Matrix& m);

}  // namespace utf8tok
