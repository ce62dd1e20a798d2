#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "utf8tok/matrix.hpp"
#include "utf8tok/token_buffer.hpp"

namespace utf8tok {

/// The 8 bits of a byte, most significant first.
using BitVector = std::array<std::uint8_t, 8>;

/// bits[k] = floor(t / 2^(7-k)) mod 2.
constexpr BitVector unpack_bits(TokenId t) noexcept {
  BitVector bits{};
  for (unsigned k = 0; k < 8; ++k) bits[k] = static_cast<std::uint8_t>((t >> (7 - k)) & 1U);
  return bits;
}

/// 256 x 8 matrix whose row t is unpack_bits(t).
Matrix bit_feature_matrix();

/// A 256 x d token embedding table with finite entries.
class EmbeddingTable {
 public:
  /// Throws ShapeError unless `m` is 256 x d with d >= 1 and all finite.
  explicit EmbeddingTable(Matrix m);

  std::size_t dim() const noexcept { return m_.cols(); }
  std::span<const float> operator[](TokenId t) const noexcept { return m_.row(t); }
  const Matrix& matrix() const noexcept { return m_; }

 private:
  Matrix m_;
};

/// An 8 x d projection of bit features into embedding space.
class BitProjection {
 public:
  /// Throws ShapeError unless `m` is 8 x d with d >= 1 and all finite.
  explicit BitProjection(Matrix m);

  /// Small uniform noise in [-scale, scale], deterministic for a seed.
  static BitProjection random(std::size_t dim, std::uint64_t seed, float scale = 0.02f);

  std::size_t dim() const noexcept { return m_.cols(); }
  /// Trainable parameters added by the bias path: 8 * d.
  std::size_t parameter_count() const noexcept { return 8 * m_.cols(); }
  const Matrix& matrix() const noexcept { return m_; }

 private:
  Matrix m_;
};

/// Row i is E[t_i] + h(t_i) W, accumulated in float32. Throws ShapeError if
/// the dimensions disagree.
Matrix embed_with_bias(TokenView tokens, const EmbeddingTable& table,
                       const BitProjection& projection);

/// Plain row gather E[t_i].
Matrix embed(TokenView tokens, const EmbeddingTable& table);

/// E' = E + H W with H the 256 x 8 bit matrix. Accumulated in float64 and
/// rounded once, so `embed(tokens, fold(E, W))` reproduces `embed_with_bias`.
EmbeddingTable fold(const EmbeddingTable& table, const BitProjection& projection);

/// dL/dW = H_tokens^T dL/dY for an upstream gradient of shape len x d.
Matrix bit_projection_gradient(TokenView tokens, const Matrix& upstream);

double frobenius_norm(const Matrix& m) noexcept;

/// Whether the bias path has converged enough to be folded away.
constexpr bool should_fold(double gradient_norm, double threshold) noexcept {
  return gradient_norm < threshold;
}

/// Scalar loss over a len x d output (row-major, float64) and its gradient.
struct LossProbe {
  std::function<double(std::span<const double>)> value;
  std::function<std::vector<double>(std::span<const double>)> gradient;

  /// L = sum of squared outputs.
  static LossProbe squared_sum();
  /// L = sum of weights[i] * y[i]; all-zero weights give a constant loss.
  static LossProbe linear(std::vector<double> weights);
};

struct GradientCheck {
  Matrix analytic;
  std::vector<double> numeric;  // 8 x d, row-major
  double max_relative_error = 0.0;
};

/// Compares `bit_projection_gradient` against central finite differences of
/// the probe, evaluated in float64 with step `step`.
GradientCheck bit_bias_gradient_check(TokenView tokens, const EmbeddingTable& table,
                                      const BitProjection& projection, const LossProbe& probe,
                                      double step = 1e-4);

}  // namespace utf8tok
