#include "utf8tok/matrix.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>

#include <fmt/format.h>

#include "utf8tok/errors.hpp"

namespace utf8tok {

namespace {

constexpr std::size_t kHeaderBytes = 8;

std::uint32_t load_u32(const std::uint8_t* p) noexcept {
  return static_cast<std::uint32_t>(p[0]) | static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 | static_cast<std::uint32_t>(p[3]) << 24;
}

void store_u32(std::uint8_t* p, std::uint32_t v) noexcept {
  p[0] = static_cast<std::uint8_t>(v);
  p[1] = static_cast<std::uint8_t>(v >> 8);
  p[2] = static_cast<std::uint8_t>(v >> 16);
  p[3] = static_cast<std::uint8_t>(v >> 24);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<float> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw ShapeError(fmt::format("{} values for a {}x{} matrix", data_.size(), rows, cols));
  }
}

bool Matrix::all_finite() const noexcept {
  for (float v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

std::vector<std::uint8_t> encode_matrix(const Matrix& m) {
  if (m.rows() > UINT32_MAX || m.cols() > UINT32_MAX) throw ShapeError("matrix too large");
  std::vector<std::uint8_t> out(kHeaderBytes + m.values().size() * sizeof(float));
  store_u32(out.data(), static_cast<std::uint32_t>(m.rows()));
  store_u32(out.data() + 4, static_cast<std::uint32_t>(m.cols()));
  std::uint8_t* p = out.data() + kHeaderBytes;
  for (float v : m.values()) {
    store_u32(p, std::bit_cast<std::uint32_t>(v));
    p += 4;
  }
  return out;
}

Matrix decode_matrix(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderBytes) throw ShapeError("matrix file shorter than its header");
  const std::size_t rows = load_u32(bytes.data());
  const std::size_t cols = load_u32(bytes.data() + 4);
  const std::size_t payload = bytes.size() - kHeaderBytes;
  if (payload != rows * cols * sizeof(float)) {
    throw ShapeError(fmt::format("header says {}x{} but payload holds {} bytes", rows, cols,
                                 payload));
  }
  std::vector<float> values(rows * cols);
  const std::uint8_t* p = bytes.data() + kHeaderBytes;
  for (float& v : values) {
    v = std::bit_cast<float>(load_u32(p));
    p += 4;
  }
  return Matrix(rows, cols, std::move(values));
}

Matrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open {}", path.string()));
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError(fmt::format("cannot read {}", path.string()));
  return decode_matrix(bytes);
}

void write_matrix(const std::filesystem::path& path, const Matrix& m) {
  const std::vector<std::uint8_t> bytes = encode_matrix(m);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open {} for writing", path.string()));
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError(fmt::format("cannot write {}", path.string()));
}

}  // namespace utf8tok
