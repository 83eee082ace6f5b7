/*
  Copyright 2026 The zhime Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

// Command-line front end. Exit codes: 0 success, 1 empty result,
// 2 operational error (bad flags, unreadable data, port in use).

#ifndef ZHIME_CLI_HPP_
#define ZHIME_CLI_HPP_

#include <algorithm>
#include <atomic>
#include <csignal>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zhime/bpmf.hpp"
#include "zhime/lexicon.hpp"
#include "zhime/pinyin.hpp"
#include "zhime/service.hpp"
#include "zhime/stroke_codec.hpp"
#include "zhime/wire.hpp"

namespace zhime::cli {

enum ExitCode : int { kOk = 0, kEmpty = 1, kFailure = 2 };

struct CliConfig {
  std::string subcommand;
  std::string dict;
  std::string syllables;
  std::string radicals;
  std::string decomp;
  std::string bpmf;
  std::string static_dir;
  int port = kDefaultPort;
  int idle_timeout = 30 * 60;
  std::string argument;
};

namespace detail {

inline Service* g_running = nullptr;

inline void stop_on_signal(int) {
  if (g_running) g_running->stop();
}

inline Lexicon load(const CliConfig& c) {
  return load_lexicon(c.dict, c.syllables, c.radicals);
}

inline int convert(const CliConfig& c, std::istream& in, std::ostream& out) {
  const auto lex = load(c);
  std::string line;
  while (std::getline(in, line)) out << convert_text(lex, line) << '\n';
  return kOk;
}

inline int encode(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const auto radicals = load_radical_map(c.radicals);
  const auto table = load_decompositions(c.decomp, radicals);
  auto cps = decode_utf8(c.argument);
  if (!cps || cps->size() != 1) {
    err << "encode: expected a single character\n";
    return kFailure;
  }
  const auto* d = table.find((*cps)[0]);
  if (d == nullptr) return kEmpty;
  out << encode_character(radicals, *d).letters() << '\n';
  return kOk;
}

inline int decode(const CliConfig& c, std::ostream& out, std::ostream& err) {
  auto code = StrokeCode::parse(c.argument);
  if (!code) {
    err << "decode: code must be 1-4 lowercase letters\n";
    return kFailure;
  }
  const auto hanzi = decode_code(load(c), *code);
  for (const auto& h : hanzi) out << h << '\n';
  return hanzi.empty() ? kEmpty : kOk;
}

inline int segment(const CliConfig& c, std::ostream& out, std::ostream& err) {
  if (c.argument.empty() || !is_lower_ascii(c.argument)) {
    err << "segment: text must be lowercase letters\n";
    return kFailure;
  }
  const auto table = load_syllable_table(c.syllables);
  auto seg = segment_phonetic(table, c.argument);
  if (!seg) return kEmpty;
  for (std::size_t i = 0; i < seg->size(); ++i) {
    out << (i ? " " : "") << (*seg)[i];
  }
  out << '\n';
  return kOk;
}

inline int stats(const CliConfig& c, std::ostream& out) {
  out << wire::to_json(collision_report(load(c))).dump(2) << '\n';
  return kOk;
}

inline int serve(const CliConfig& c, std::ostream& out, std::ostream& err) {
  auto lex = std::make_shared<const Lexicon>(load(c));
  std::shared_ptr<const BpmfLayout> bpmf;
  if (!c.bpmf.empty()) {
    bpmf = std::make_shared<const BpmfLayout>(load_bpmf_layout(c.bpmf));
  }
  ServiceOptions opts;
  opts.idle_timeout = std::chrono::seconds(c.idle_timeout);
  opts.static_dir = c.static_dir;
  Service service(lex, bpmf, opts);
  if (!service.bind("127.0.0.1", c.port)) {
    err << "serve: cannot bind port " << c.port << '\n';
    return kFailure;
  }
  out << "listening on http://127.0.0.1:" << c.port << '\n' << std::flush;
  g_running = &service;
  std::signal(SIGINT, stop_on_signal);
  std::signal(SIGTERM, stop_on_signal);
  service.serve();
  g_running = nullptr;
  return kOk;
}

}  // namespace detail

// args excludes the program name. data_dir supplies default file paths.
inline int run(std::vector<std::string> args, std::istream& in,
               std::ostream& out, std::ostream& err,
               const std::filesystem::path& data_dir) {
  CliConfig c;
  auto data = [&](const char* name) { return (data_dir / name).string(); };
  c.dict = data("dict.tsv");
  c.syllables = data("syllables.txt");
  c.radicals = data("radicals.tsv");
  c.decomp = data("decomp.tsv");
  if (std::filesystem::exists(data_dir / "bpmf.tsv")) c.bpmf = data("bpmf.tsv");

  CLI::App app{"Chinese input on a 26-letter keyboard", "zhime"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--dict", c.dict, "dictionary TSV");
  app.add_option("--syllables", c.syllables, "syllable table");
  app.add_option("--radicals", c.radicals, "radical key map");
  app.add_option("--decomp", c.decomp, "character decompositions");
  app.add_option("--bpmf", c.bpmf, "bopomofo key layout");
  app.add_option("--port", c.port, "HTTP port")->check(CLI::Range(0, 65535));
  app.add_option("--static", c.static_dir, "directory served at /");
  app.add_option("--idle-timeout", c.idle_timeout, "session idle timeout, seconds")
      ->check(CLI::PositiveNumber);

  app.add_subcommand("convert", "convert pinyin lines from stdin to hanzi");
  app.add_subcommand("encode", "print the stroke code of a character")
      ->add_option("hanzi", c.argument)->required();
  app.add_subcommand("decode", "list the characters for a stroke code")
      ->add_option("code", c.argument)->required();
  app.add_subcommand("segment", "split a letter string into syllables")
      ->add_option("text", c.argument)->required();
  app.add_subcommand("serve", "run the HTTP session service");
  app.add_subcommand("stats", "print stroke code collision statistics as JSON");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "zhime: " << e.what() << "\n\n" << app.help();
    return kFailure;
  }
  c.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (c.subcommand == "convert") return detail::convert(c, in, out);
    if (c.subcommand == "encode") return detail::encode(c, out, err);
    if (c.subcommand == "decode") return detail::decode(c, out, err);
    if (c.subcommand == "segment") return detail::segment(c, out, err);
    if (c.subcommand == "stats") return detail::stats(c, out);
    if (c.subcommand == "serve") return detail::serve(c, out, err);
  } catch (const std::exception& e) {
    err << "zhime: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace zhime::cli

#endif  // ZHIME_CLI_HPP_
