// Copyright 2026 The ametaphone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ametaphone/ametaphone.hpp"

namespace ametaphone::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

inline constexpr const char* kDataDirEnv = "AMETAPHONE_DATA_DIR";

struct Token {
  std::u32string text;
  bool ethiopic = false;
};

inline bool is_separator(char32_t c) {
  if (c >= 0x1360 && c <= 0x1368) return true;  // Ethiopic wordspace and punctuation
  switch (c) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

// Splits running text on whitespace and Ethiopic punctuation. Tokens with
// any non-syllable scalar are flagged and passed through untouched.
inline std::vector<Token> tokenize(std::u32string_view text) {
  std::vector<Token> out;
  std::u32string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    bool ethiopic = true;
    for (char32_t c : cur) ethiopic = ethiopic && is_syllable(c);
    out.push_back({std::move(cur), ethiopic});
    cur.clear();
  };
  for (char32_t c : text) {
    if (is_separator(c)) {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return out;
}

struct Options {
  std::string data_dir;
  std::string profile;  // "", "none" or a path
  bool wy_vowels = false;
  std::size_t max_encodings = 16;
  std::string format = "text";
  bool use_stdin = false;
  std::vector<std::string> words;
  std::string lexicon;
  std::string corpus;
  std::string out;
  std::size_t limit = 10;
};

inline Encoder make_encoder(const Options& opt) {
  std::string dir = opt.data_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv(kDataDirEnv)) dir = env;
  }
  EncoderConfig config;
  config.wy_as_vowels = opt.wy_vowels;
  config.max_encodings = opt.max_encodings;
  if (opt.profile == "none") {
    config.input_method_profile.reset();
  } else if (!opt.profile.empty()) {
    config.input_method_profile = MistrikeProfile::load(opt.profile);
  } else if (!dir.empty()) {
    config.input_method_profile = MistrikeProfile::load(dir + "/phonetic.profile");
  }
  if (dir.empty()) return Encoder(std::move(config));
  return Encoder(std::move(config), ScriptTables::load(dir + "/script.tbl"),
                 GlyphPairs::load(dir + "/glyph.tbl"));
}

// Words from the command line, or tokens from stdin with --stdin.
inline std::vector<Token> collect_inputs(const Options& opt, std::istream& in) {
  std::vector<Token> tokens;
  if (opt.use_stdin) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      auto cps = utf8::decode(line);
      if (!cps) throw LoadError("<stdin>", line_no, "malformed UTF-8");
      for (auto& t : tokenize(*cps)) tokens.push_back(std::move(t));
    }
    return tokens;
  }
  for (const auto& w : opt.words) {
    auto cps = detail::decode_or_throw(w);
    for (char32_t c : cps) {
      if (!is_syllable(c)) throw Error("not an Ethiopic word: '" + w + "'");
    }
    tokens.push_back({std::move(cps), true});
  }
  return tokens;
}

inline nlohmann::json encoding_json(const EncodingSet& set) {
  auto arr = nlohmann::json::array();
  for (const auto& e : set) arr.push_back({{"key", e.key_utf8()}, {"tier", to_int(e.tier)}});
  return arr;
}

inline int cmd_encode(const Options& opt, std::istream& in, std::ostream& out) {
  const auto encoder = make_encoder(opt);
  for (const auto& tok : collect_inputs(opt, in)) {
    auto word = utf8::encode(tok.text);
    if (!tok.ethiopic) {
      if (opt.format == "jsonl") {
        out << nlohmann::json{{"word", word}, {"skipped", true}}.dump() << '\n';
      } else {
        out << word << "\t-\n";
      }
      continue;
    }
    auto set = encoder.encode(std::u32string_view(tok.text));
    if (opt.format == "jsonl") {
      out << nlohmann::json{{"word", word}, {"encodings", encoding_json(set)}}.dump() << '\n';
    } else {
      for (const auto& e : set) out << word << '\t' << to_int(e.tier) << '\t' << e.key_utf8() << '\n';
    }
  }
  return kExitOk;
}

inline int cmd_suggest(const Options& opt, std::istream& in, std::ostream& out) {
  const auto encoder = make_encoder(opt);
  const auto index = build_index(load_lexicon(opt.lexicon), encoder);
  for (const auto& tok : collect_inputs(opt, in)) {
    auto word = utf8::encode(tok.text);
    if (!tok.ethiopic) {
      if (opt.format == "jsonl") {
        out << nlohmann::json{{"query", word}, {"skipped", true}}.dump() << '\n';
      } else {
        out << word << "\t-\n";
      }
      continue;
    }
    auto hits = suggest(std::u32string_view(tok.text), index, encoder, opt.limit);
    if (opt.format == "jsonl") {
      auto arr = nlohmann::json::array();
      for (const auto& s : hits) {
        arr.push_back({{"word", utf8::encode(s.word)},
                       {"tier", to_int(s.match_tier)},
                       {"distance", s.distance}});
      }
      out << nlohmann::json{{"query", word}, {"suggestions", arr}}.dump() << '\n';
      continue;
    }
    if (hits.empty()) out << word << "\t0\t-\n";
    for (std::size_t i = 0; i < hits.size(); ++i) {
      out << word << '\t' << i + 1 << '\t' << utf8::encode(hits[i].word) << '\t'
          << to_int(hits[i].match_tier) << '\t' << hits[i].distance << '\n';
    }
  }
  return kExitOk;
}

inline int cmd_index(const Options& opt, std::ostream& out) {
  const auto encoder = make_encoder(opt);
  const auto index = build_index(load_lexicon(opt.lexicon), encoder);
  if (opt.out == "-") {
    index.dump(out);
    return kExitOk;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw LoadError(opt.out, 0, "cannot open for writing");
  index.dump(file);
  if (!file.flush()) throw LoadError(opt.out, 0, "write failed");
  return kExitOk;
}

inline int cmd_evaluate(const Options& opt, std::ostream& out) {
  const auto encoder = make_encoder(opt);
  const auto corpus = load_corpus(opt.corpus);
  std::optional<EncodingIndex> index;
  if (!opt.lexicon.empty()) index = build_index(load_lexicon(opt.lexicon), encoder);

  if (opt.format == "jsonl") {
    for (const auto& e : corpus) {
      nlohmann::json rec{{"canonical", utf8::encode(e.canonical)},
                         {"variant", utf8::encode(e.variant)},
                         {"type", e.error_type},
                         {"matched", matches(e.canonical, e.variant, encoder)},
                         {"expected_fail", e.expected_fail}};
      if (index) {
        bool found = false;
        for (const auto& s : suggest(std::u32string_view(e.variant), *index, encoder, opt.limit)) {
          found = found || s.word == e.canonical;
        }
        rec["suggested"] = found;
      }
      out << rec.dump() << '\n';
    }
    return kExitOk;
  }

  const auto report = evaluate(corpus, encoder);
  std::optional<Tally> recall;
  if (index) recall = suggestion_recall(corpus, *index, encoder, opt.limit);
  if (opt.format == "kv") {
    out << format_kv(report);
    if (recall) {
      out << "suggest.limit=" << opt.limit << '\n'
          << "suggest.recall.total=" << recall->total << '\n'
          << "suggest.recall.matched=" << recall->matched << '\n';
    }
  } else {
    out << format_text(report);
    if (recall) {
      out << "\nsuggestion recall (limit " << opt.limit << "): " << recall->matched << '/'
          << recall->total << '\n';
    }
  }
  return kExitOk;
}

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  Options opt;
  CLI::App app{"Amharic phonetic encoder, speller and corpus evaluator", "ametaphone"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--data-dir", opt.data_dir,
                 std::string("table directory (default: $") + kDataDirEnv + " or built-in)");
  app.add_option("--profile", opt.profile, "mistrike profile file, or 'none' to disable step 5");
  app.add_flag("--wy-vowels", opt.wy_vowels, "treat ወ and የ like vowels");
  app.add_option("--max-encodings", opt.max_encodings, "cap on keys per word")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "text, jsonl, or kv (evaluate only)")
      ->check(CLI::IsMember({"text", "jsonl", "kv"}));

  auto* encode = app.add_subcommand("encode", "print the encodings of each word");
  encode->add_option("words", opt.words, "Ethiopic words");
  encode->add_flag("--stdin", opt.use_stdin, "read running text from standard input");

  auto* sug = app.add_subcommand("suggest", "rank lexicon words matching each query");
  sug->add_option("--lexicon", opt.lexicon, "word list")->required();
  sug->add_option("--limit", opt.limit, "suggestions per query")->check(CLI::PositiveNumber);
  sug->add_option("words", opt.words, "misspelled words");
  sug->add_flag("--stdin", opt.use_stdin, "read running text from standard input");

  auto* idx = app.add_subcommand("index", "write the encoding index of a lexicon");
  idx->add_option("--lexicon", opt.lexicon, "word list")->required();
  idx->add_option("--out", opt.out, "output file, '-' for stdout")->required();

  auto* eval = app.add_subcommand("evaluate", "match rates over a misspelling corpus");
  eval->add_option("--corpus", opt.corpus, "canonical/variant/type TSV")->required();
  eval->add_option("--lexicon", opt.lexicon, "also measure suggestion recall");
  eval->add_option("--limit", opt.limit, "suggestions considered for recall")
      ->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ametaphone: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  auto* active = app.get_subcommands().front();
  if ((active == encode || active == sug) && opt.words.empty() && !opt.use_stdin) {
    err << "ametaphone: no words given\n\n" << active->help();
    return kExitUsage;
  }
  if (opt.format == "kv" && active != eval) {
    err << "ametaphone: --format kv applies to evaluate only\n";
    return kExitUsage;
  }

  try {
    if (active == encode) return cmd_encode(opt, in, out);
    if (active == sug) return cmd_suggest(opt, in, out);
    if (active == idx) return cmd_index(opt, out);
    return cmd_evaluate(opt, out);
  } catch (const Error& e) {
    err << "ametaphone: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace ametaphone::cli
