#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace utf8tok {

struct BenchmarkReport {
  std::size_t input_bytes = 0;
  std::size_t iterations = 0;
  /// Mean seconds per tokenize pass.
  double wall_time = 0.0;
  /// input_bytes / wall_time.
  double throughput = 0.0;
  std::size_t bytes_per_token = 1;
  /// Mean seconds per pass of the naive reference loop.
  double baseline_wall_time = 0.0;
  /// baseline_wall_time / wall_time.
  double comparison_ratio = 0.0;
};

/// Reference tokenizer: decodes one code point at a time, re-encodes it and
/// appends each byte as a 64-bit ID. Throws DecodeError on invalid input.
std::vector<std::int64_t> naive_tokenize(std::string_view text);

/// Times validated tokenization of `text` against `naive_tokenize`. Throws
/// utf8tok::Error on empty input or zero iterations, DecodeError on invalid
/// UTF-8.
BenchmarkReport run_benchmark(std::string_view text, std::size_t iterations);

/// One "key value" pair per line.
std::string format_report(const BenchmarkReport& report);

}  // namespace utf8tok
