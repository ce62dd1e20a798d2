// utf8tok: command-line front end.
//
// Exit codes: 0 success, 1 validation or structure error, 2 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "utf8tok/bench.hpp"
#include "utf8tok/bit_embedding.hpp"
#include "utf8tok/chat.hpp"
#include "utf8tok/chat_json.hpp"
#include "utf8tok/matrix.hpp"
#include "utf8tok/tokenizer.hpp"
#include "utf8tok/visualize.hpp"

namespace {

using namespace utf8tok;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitIo = 2;

// "-" means stdin/stdout.
std::string read_all(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open {}", path));
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError(fmt::format("cannot read {}", path));
  return data;
}

void write_all(const std::string& path, std::string_view data) {
  if (path == "-") {
    std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
    std::cout.flush();
    if (!std::cout) throw IoError("cannot write to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open {} for writing", path));
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError(fmt::format("cannot write {}", path));
}

int cmd_tokenize(const std::string& in, const std::string& out) {
  const std::string text = read_all(in);
  if (auto diagnostics = validate_utf8(as_tokens(text)); !diagnostics.empty()) {
    throw DecodeError(diagnostics.front());
  }
  write_all(out, as_chars(tokenize(text).view()));
  return kExitOk;
}

int cmd_detokenize(const std::string& in, const std::string& out, const std::string& policy) {
  const std::string tokens = read_all(in);
  const DecodePolicy p = policy == "replace" ? DecodePolicy::replace : DecodePolicy::strict;
  write_all(out, detokenize(as_tokens(tokens), p));
  return kExitOk;
}

int cmd_chat(const std::string& in, const std::string& out, std::optional<std::size_t> pad,
             bool parse) {
  const std::string data = read_all(in);
  if (parse) {
    const Conversation conversation = parse_chat(as_tokens(data));
    write_all(out, conversation_to_json(conversation) + "\n");
    return kExitOk;
  }
  Conversation conversation = conversation_from_json(data);
  if (pad) conversation.pad_to = *pad;
  write_all(out, as_chars(apply_chat_template(conversation).view()));
  return kExitOk;
}

int cmd_visualize(const std::string& in, const std::string& out, bool show_whitespace,
                  bool annotate) {
  const std::string data = read_all(in);
  write_all(out, visualize_control_tokens(as_tokens(data), RenderOptions{show_whitespace, annotate}));
  return kExitOk;
}

int cmd_fold(const std::string& e_path, const std::string& w_path, const std::string& out) {
  const EmbeddingTable table(read_matrix(e_path));
  const BitProjection projection(read_matrix(w_path));
  write_matrix(out, fold(table, projection).matrix());
  return kExitOk;
}

int cmd_validate(const std::string& in, bool advisories) {
  const std::string data = read_all(in);
  const auto diagnostics =
      validate_utf8(as_tokens(data), advisories ? Advisories::include : Advisories::exclude);
  bool failed = false;
  for (const Utf8Diagnostic& d : diagnostics) {
    fmt::print("{} {} 0x{:02X}\n", d.offset, to_string(d.kind), d.byte_value);
    failed = failed || !d.is_advisory();
  }
  std::fflush(stdout);
  return failed ? kExitInvalid : kExitOk;
}

int cmd_bench(const std::string& in, std::size_t iterations) {
  const std::string data = read_all(in);
  fmt::print("{}", format_report(run_benchmark(data, iterations)));
  std::fflush(stdout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Byte-level UTF-8 tokenizer with a C0 control-byte protocol"};
  app.require_subcommand(1);

  std::string in, out = "-", policy = "strict", e_path, w_path;
  std::optional<std::size_t> pad;
  std::size_t iterations = 10;
  bool parse = false, show_whitespace = false, annotate = false, advisories = false;

  auto* tok = app.add_subcommand("tokenize", "UTF-8 text file to raw token file");
  tok->add_option("input", in, "UTF-8 text ('-' for stdin)")->required();
  tok->add_option("output", out, "token file ('-' for stdout)");

  auto* detok = app.add_subcommand("detokenize", "raw token file to UTF-8 text");
  detok->add_option("input", in, "token file ('-' for stdin)")->required();
  detok->add_option("output", out, "text file ('-' for stdout)");
  detok->add_option("--policy", policy, "strict or replace")
      ->check(CLI::IsMember({"strict", "replace"}));

  auto* chat = app.add_subcommand("chat", "render a conversation document, or parse one back");
  chat->add_option("input", in, "conversation JSON, or tokens with --parse")->required();
  chat->add_option("output", out, "output file ('-' for stdout)");
  chat->add_option("--pad", pad, "pad the rendering with <NUL> to this total length");
  chat->add_flag("--parse", parse, "parse a token stream into a conversation document");

  auto* vis = app.add_subcommand("visualize", "show control bytes as Unicode Control Pictures");
  vis->add_option("input", in, "token file ('-' for stdin)")->required();
  vis->add_option("-o,--output", out, "output file ('-' for stdout)");
  vis->add_flag("--show-whitespace", show_whitespace, "also picture bytes 0x09-0x0D");
  vis->add_flag("--annotate", annotate, "append mnemonics, e.g. ␂(STX)");

  auto* fold_cmd = app.add_subcommand("fold", "fold a bit projection into an embedding table");
  fold_cmd->add_option("embeddings", e_path, "256 x d matrix file")->required();
  fold_cmd->add_option("bit_projection", w_path, "8 x d matrix file")->required();
  fold_cmd->add_option("output", out, "folded 256 x d matrix file")->required();

  auto* val = app.add_subcommand("validate", "report UTF-8 problems as 'offset kind byte'");
  val->add_option("input", in, "token file ('-' for stdin)")->required();
  val->add_flag("--advisories", advisories, "also report rare leading bytes");

  auto* bench = app.add_subcommand("bench", "time tokenization against a naive loop");
  bench->add_option("input", in, "UTF-8 text file")->required();
  bench->add_option("--iters", iterations, "number of passes")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*tok) return cmd_tokenize(in, out);
    if (*detok) return cmd_detokenize(in, out, policy);
    if (*chat) return cmd_chat(in, out, pad, parse);
    if (*vis) return cmd_visualize(in, out, show_whitespace, annotate);
    if (*fold_cmd) return cmd_fold(e_path, w_path, out);
    if (*val) return cmd_validate(in, advisories);
    if (*bench) return cmd_bench(in, iterations);
  } catch (const IoError& e) {
    fmt::print(stderr, "utf8tok: {}\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    fmt::print(stderr, "utf8tok: {}\n", e.what());
    return kExitInvalid;
  }
  return kExitInvalid;
}
