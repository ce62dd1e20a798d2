#include "utf8tok/bit_embedding.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <random>

#include <fmt/format.h>

#include "utf8tok/errors.hpp"
#include "utf8tok/simd/kernels.hpp"

namespace utf8tok {

namespace {

void check_same_dim(const EmbeddingTable& table, const BitProjection& projection) {
  if (table.dim() != projection.dim()) {
    throw ShapeError(fmt::format("embedding dim {} does not match bit projection dim {}",
                                 table.dim(), projection.dim()));
  }
}

Matrix checked(Matrix m, std::size_t rows, const char* what) {
  if (m.rows() != rows || m.cols() == 0) {
    throw ShapeError(fmt::format("{} must be {} x d with d >= 1, got {} x {}", what, rows, m.rows(),
                                 m.cols()));
  }
  if (!m.all_finite()) throw ShapeError(fmt::format("{} has non-finite entries", what));
  return m;
}

// Output rows in float64: E[t] + h(t) W, for the finite-difference oracle.
std::vector<double> embed_f64(TokenView tokens, const Matrix& table, const std::vector<double>& w) {
  const std::size_t d = table.cols();
  std::vector<double> y(tokens.size() * d);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const TokenId t = tokens[i];
    for (std::size_t j = 0; j < d; ++j) {
      double acc = table(t, j);
      for (unsigned k = 0; k < 8; ++k) {
        if ((t >> (7 - k)) & 1U) acc += w[k * d + j];
      }
      y[i * d + j] = acc;
    }
  }
  return y;
}

}  // namespace

Matrix bit_feature_matrix() {
  Matrix h(256, 8);
  for (unsigned t = 0; t < 256; ++t) {
    const BitVector bits = unpack_bits(static_cast<TokenId>(t));
    for (unsigned k = 0; k < 8; ++k) h(t, k) = bits[k];
  }
  return h;
}

EmbeddingTable::EmbeddingTable(Matrix m) : m_(checked(std::move(m), 256, "embedding table")) {}

BitProjection::BitProjection(Matrix m) : m_(checked(std::move(m), 8, "bit projection")) {}

BitProjection BitProjection::random(std::size_t dim, std::uint64_t seed, float scale) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<float> noise(-scale, scale);
  Matrix m(8, dim);
  for (std::size_t i = 0; i < 8 * dim; ++i) m.data()[i] = noise(rng);
  return BitProjection(std::move(m));
}

Matrix embed(TokenView tokens, const EmbeddingTable& table) {
  const std::size_t d = table.dim();
  Matrix out(tokens.size(), d);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::memcpy(out.row(i).data(), table[tokens[i]].data(), d * sizeof(float));
  }
  return out;
}

Matrix embed_with_bias(TokenView tokens, const EmbeddingTable& table,
                       const BitProjection& projection) {
  check_same_dim(table, projection);
  const auto& kernels = simd::active();
  const std::size_t d = table.dim();
  const Matrix& w = projection.matrix();
  Matrix out = embed(tokens, table);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    for (unsigned k = 0; k < 8; ++k) {
      if ((tokens[i] >> (7 - k)) & 1U) kernels.add_row(out.row(i).data(), w.row(k).data(), d);
    }
  }
  return out;
}

EmbeddingTable fold(const EmbeddingTable& table, const BitProjection& projection) {
  check_same_dim(table, projection);
  const auto& kernels = simd::active();
  const std::size_t d = table.dim();
  Matrix out(256, d);
  for (unsigned t = 0; t < 256; ++t) {
    const auto token = static_cast<TokenId>(t);
    kernels.fold_row(table[token].data(), projection.matrix().data(), token, d, out.row(t).data());
  }
  return EmbeddingTable(std::move(out));
}

Matrix bit_projection_gradient(TokenView tokens, const Matrix& upstream) {
  if (upstream.rows() != tokens.size()) {
    throw ShapeError(fmt::format("upstream gradient has {} rows for {} tokens", upstream.rows(),
                                 tokens.size()));
  }
  const auto& kernels = simd::active();
  const std::size_t d = upstream.cols();
  Matrix grad(8, d);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    for (unsigned k = 0; k < 8; ++k) {
      if ((tokens[i] >> (7 - k)) & 1U) kernels.add_row(grad.row(k).data(), upstream.row(i).data(), d);
    }
  }
  return grad;
}

double frobenius_norm(const Matrix& m) noexcept {
  double sum = 0.0;
  for (float v : m.values()) sum += static_cast<double>(v) * v;
  return std::sqrt(sum);
}

LossProbe LossProbe::squared_sum() {
  return LossProbe{
      [](std::span<const double> y) {
        double sum = 0.0;
        for (double v : y) sum += v * v;
        return sum;
      },
      [](std::span<const double> y) {
        std::vector<double> g(y.size());
        std::transform(y.begin(), y.end(), g.begin(), [](double v) { return 2.0 * v; });
        return g;
      },
  };
}

LossProbe LossProbe::linear(std::vector<double> weights) {
  return LossProbe{
      [weights](std::span<const double> y) {
        if (y.size() != weights.size()) throw ShapeError("linear probe size mismatch");
        double sum = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) sum += weights[i] * y[i];
        return sum;
      },
      [weights](std::span<const double> y) {
        if (y.size() != weights.size()) throw ShapeError("linear probe size mismatch");
        return weights;
      },
  };
}

GradientCheck bit_bias_gradient_check(TokenView tokens, const EmbeddingTable& table,
                                      const BitProjection& projection, const LossProbe& probe,
                                      double step) {
  check_same_dim(table, projection);
  const std::size_t d = table.dim();

  const Matrix y = embed_with_bias(tokens, table, projection);
  const std::vector<double> y64(y.values().begin(), y.values().end());
  const std::vector<double> dy = probe.gradient(y64);
  Matrix upstream(tokens.size(), d);
  std::transform(dy.begin(), dy.end(), upstream.data(),
                 [](double v) { return static_cast<float>(v); });

  GradientCheck result{bit_projection_gradient(tokens, upstream), std::vector<double>(8 * d), 0.0};

  std::vector<double> w(projection.matrix().values().begin(), projection.matrix().values().end());
  for (std::size_t idx = 0; idx < w.size(); ++idx) {
    const double saved = w[idx];
    w[idx] = saved + step;
    const double plus = probe.value(embed_f64(tokens, table.matrix(), w));
    w[idx] = saved - step;
    const double minus = probe.value(embed_f64(tokens, table.matrix(), w));
    w[idx] = saved;
    result.numeric[idx] = (plus - minus) / (2.0 * step);

    const double a = result.analytic.data()[idx];
    const double n = result.numeric[idx];
    const double scale = std::max(std::abs(a), std::abs(n));
    if (scale > 0.0) {
      result.max_relative_error = std::max(result.max_relative_error, std::abs(a - n) / scale);
    }
  }
  return result;
}

}  // namespace utf8tok
