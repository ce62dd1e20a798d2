#include "utf8tok/bench.hpp"

#include <chrono>

#include <fmt/format.h>

#include "utf8tok/tokenizer.hpp"
#include "utf8tok/utf8.hpp"

namespace utf8tok {

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double mean_seconds(std::size_t iterations, F&& pass) {
  const auto start = Clock::now();
  for (std::size_t i = 0; i < iterations; ++i) pass();
  const std::chrono::duration<double> elapsed = Clock::now() - start;
  return elapsed.count() / static_cast<double>(iterations);
}

}  // namespace

std::vector<std::int64_t> naive_tokenize(std::string_view text) {
  const TokenView bytes = as_tokens(text);
  std::vector<std::int64_t> ids;
  std::string encoded;
  std::size_t i = 0;
  while (i < bytes.size()) {
    const DecodeStep step = decode_one(bytes.subspan(i));
    if (!step.ok) throw DecodeError({i, step.error, bytes[i]});
    encoded.clear();
    append_utf8(encoded, step.code_point);
    for (char c : encoded) ids.push_back(static_cast<unsigned char>(c));
    i += step.length;
  }
  return ids;
}

BenchmarkReport run_benchmark(std::string_view text, std::size_t iterations) {
  if (text.empty()) throw Error("empty benchmark input");
  if (iterations == 0) throw Error("benchmark needs at least one iteration");
  if (!is_valid_utf8(as_tokens(text))) {
    (void)detokenize(as_tokens(text));  // throws the first diagnostic
  }

  volatile std::size_t sink = 0;
  BenchmarkReport report;
  report.input_bytes = text.size();
  report.iterations = iterations;
  report.wall_time = mean_seconds(iterations, [&] {
    if (!is_valid_utf8(as_tokens(text))) throw Error("input changed during benchmark");
    const TokenBuffer tokens = tokenize(text);
    sink = sink + tokens.size() + tokens[tokens.size() / 2];
  });
  report.baseline_wall_time = mean_seconds(iterations, [&] {
    const std::vector<std::int64_t> ids = naive_tokenize(text);
    sink = sink + ids.size() + static_cast<std::size_t>(ids[ids.size() / 2]);
  });
  report.throughput = static_cast<double>(report.input_bytes) / report.wall_time;
  report.comparison_ratio = report.baseline_wall_time / report.wall_time;
  return report;
}

std::string format_report(const BenchmarkReport& r) {
  return fmt::format(
      "input_bytes {}\niterations {}\nwall_time_s {:.9f}\nthroughput_bytes_per_s {:.1f}\n"
      "bytes_per_token {}\nbaseline_wall_time_s {:.9f}\ncomparison_ratio {:.3f}\n",
      r.input_bytes, r.iterations, r.wall_time, r.throughput, r.bytes_per_token,
      r.baseline_wall_time, r.comparison_ratio);
}

}  // namespace utf8tok
