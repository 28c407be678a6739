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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "test_util.hpp"

namespace ametaphone {
namespace {

using testing::read_text;
using testing::source_path;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "ametaphone");
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  return read_text(std::string(AMETAPHONE_TEST_DATA) + "/../golden/" + name);
}

std::string data(const std::string& name) { return source_path("data/" + name); }

TEST(Cli, EncodeLam) {
  auto r = run({"encode", "ላም"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "ላም\t0\tልም\n");
  EXPECT_EQ(r.err, "");
}

TEST(Cli, EncodeWithoutWordIsUsageError) {
  auto r = run({"encode"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_EQ(r.out, "");
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
}

TEST(Cli, EncodeGolden) {
  auto r = run({"encode", "ላም", "ጧት", "ወምበር", "ዓለምፀሐይ", "ኘሬዚዳንት"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("encode_words.txt"));
}

TEST(Cli, EncodeStdinJsonl) {
  auto text = golden("running_text.txt");
  auto r = run({"--format", "jsonl", "encode", "--stdin"}, text);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("encode_stdin.jsonl"));

  // One record per token, each a complete JSON object.
  auto tokens = cli::tokenize(*utf8::decode(text));
  ASSERT_EQ(tokens.size(), 5U);
  std::istringstream lines(r.out);
  std::size_t count = 0;
  for (std::string line; std::getline(lines, line); ++count) {
    auto rec = nlohmann::json::parse(line);
    EXPECT_EQ(rec.at("word").get<std::string>(), utf8::encode(tokens[count].text));
    EXPECT_EQ(rec.contains("skipped"), !tokens[count].ethiopic);
  }
  EXPECT_EQ(count, tokens.size());
}

TEST(Cli, Tokenize) {
  auto t = cli::tokenize(U"  ላም፣ሎሚ፤ abc፡ጧት\t\n");
  ASSERT_EQ(t.size(), 4U);
  EXPECT_EQ(t[0].text, U"ላም");
  EXPECT_EQ(t[1].text, U"ሎሚ");
  EXPECT_EQ(t[2].text, U"abc");
  EXPECT_FALSE(t[2].ethiopic);
  EXPECT_EQ(t[3].text, U"ጧት");
  EXPECT_TRUE(cli::tokenize(U" ፡ ").empty());
  // A mixed token is passed through whole.
  auto mixed = cli::tokenize(U"ላ1ም");
  ASSERT_EQ(mixed.size(), 1U);
  EXPECT_FALSE(mixed[0].ethiopic);
}

TEST(Cli, EncodeStdinText) {
  auto r = run({"encode", "--stdin"}, "ላም hi\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ላም\t0\tልም\nhi\t-\n");
  EXPECT_EQ(run({"encode", "--stdin"}, "ላም\n\xE1\x88\n").code, cli::kExitData);
}

TEST(Cli, NonEthiopicArgumentIsDataError) {
  auto r = run({"encode", "lam"});
  EXPECT_EQ(r.code, cli::kExitData);
  EXPECT_NE(r.err.find("lam"), std::string::npos);
}

TEST(Cli, ProfileNone) {
  auto r = run({"--profile", "none", "encode", "ጧት"});
  EXPECT_EQ(r.out, "ጧት\t0\tጥውት\n");
  testing::TempFile profile("p.profile", "[mistrike]\nጠ ደ\n");
  EXPECT_EQ(run({"--profile", profile.path(), "encode", "ጧት"}).out,
            "ጧት\t0\tጥውት\nጧት\t3\tድውት\n");
  EXPECT_EQ(run({"--profile", "/nonexistent.profile", "encode", "ጧት"}).code, cli::kExitData);
}

TEST(Cli, WyVowelsAndCap) {
  EXPECT_EQ(run({"--wy-vowels", "encode", "ሰላይ"}).out, "ሰላይ\t0\tስል\n");
  EXPECT_EQ(run({"--max-encodings", "1", "encode", "ጧት"}).out, "ጧት\t0\tጥውት\n");
  EXPECT_EQ(run({"--max-encodings", "0", "encode", "ጧት"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--format", "xml", "encode", "ጧት"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--format", "kv", "encode", "ጧት"}).code, cli::kExitUsage);
}

TEST(Cli, SuggestGolden) {
  auto r = run({"suggest", "--lexicon", data("lexicon.txt"), "ሊም", "ጧት", "ቤት"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("suggest.txt"));
}

TEST(Cli, SuggestFindsBothPermutations) {
  testing::TempFile lex("lex.txt", "ላም\nሎሚ\nለም\nልማ\n");
  auto r = run({"suggest", "--lexicon", lex.path(), "--limit", "4", "ሊም"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\tላም\t"), std::string::npos);
  EXPECT_NE(r.out.find("\tሎሚ\t"), std::string::npos);

  auto j = run({"--format", "jsonl", "suggest", "--lexicon", lex.path(), "ሊም", "ቤት"});
  std::istringstream lines(j.out);
  std::string first, second, extra;
  ASSERT_TRUE(std::getline(lines, first));
  ASSERT_TRUE(std::getline(lines, second));
  EXPECT_FALSE(std::getline(lines, extra));
  EXPECT_EQ(nlohmann::json::parse(first).at("suggestions").size(), 4U);
  EXPECT_TRUE(nlohmann::json::parse(second).at("suggestions").empty());
}

TEST(Cli, SuggestErrors) {
  EXPECT_EQ(run({"suggest", "ሊም"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"suggest", "--lexicon", data("lexicon.txt")}).code, cli::kExitUsage);
  EXPECT_EQ(run({"suggest", "--lexicon", data("lexicon.txt"), "--limit", "0", "ሊም"}).code,
            cli::kExitUsage);
  testing::TempFile bad("bad.txt", "ላም\nlam\n");
  auto r = run({"suggest", "--lexicon", bad.path(), "ሊም"});
  EXPECT_EQ(r.code, cli::kExitData);
  EXPECT_NE(r.err.find(bad.path() + ":2:"), std::string::npos);
}

TEST(Cli, IndexDump) {
  Encoder e;
  auto expected = build_index(load_lexicon(data("lexicon.txt")), e).dump();
  auto r = run({"index", "--lexicon", data("lexicon.txt"), "--out", "-"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, expected);

  testing::TempFile out("index.txt", "");
  EXPECT_EQ(run({"index", "--lexicon", data("lexicon.txt"), "--out", out.path()}).code, 0);
  EXPECT_EQ(read_text(out.path()), expected);
  EXPECT_EQ(EncodingIndex::load(out.path()).entries(), EncodingIndex::parse(expected).entries());

  EXPECT_EQ(run({"index", "--lexicon", data("lexicon.txt")}).code, cli::kExitUsage);
  EXPECT_EQ(run({"index", "--lexicon", data("lexicon.txt"), "--out", "/nonexistent/dir/x"}).code,
            cli::kExitData);
}

TEST(Cli, EvaluateGolden) {
  auto r = run({"--format", "kv", "evaluate", "--corpus", data("appendix.tsv"), "--lexicon",
                data("lexicon.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("evaluate_appendix.kv"));
}

TEST(Cli, EvaluateText) {
  auto r = run({"evaluate", "--lexicon", data("lexicon.txt"), "--corpus", data("appendix.tsv")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1  syllographic redundancy"), std::string::npos);
  EXPECT_NE(r.out.find("100.0%"), std::string::npos);
  EXPECT_NE(r.out.find("7\tዓፄ\tዓጤ"), std::string::npos);
  EXPECT_NE(r.out.find("suggestion recall (limit 10): 114/135"), std::string::npos);
}

TEST(Cli, EvaluateJsonlOneRecordPerEntry) {
  auto r = run({"--format", "jsonl", "evaluate", "--corpus", data("appendix.tsv")});
  EXPECT_EQ(r.code, 0);
  auto corpus = load_corpus(data("appendix.tsv"));
  std::istringstream lines(r.out);
  std::size_t count = 0, matched = 0;
  for (std::string line; std::getline(lines, line); ++count) {
    auto rec = nlohmann::json::parse(line);
    ASSERT_LT(count, corpus.size());
    EXPECT_EQ(rec.at("variant").get<std::string>(), utf8::encode(corpus[count].variant));
    matched += rec.at("matched").get<bool>();
  }
  EXPECT_EQ(count, corpus.size());
  EXPECT_EQ(matched, 114U);
}

TEST(Cli, EvaluateErrors) {
  EXPECT_EQ(run({"evaluate"}).code, cli::kExitUsage);
  testing::TempFile empty("empty.tsv", "# nothing\n");
  EXPECT_EQ(run({"evaluate", "--corpus", empty.path()}).code, cli::kExitData);
  testing::TempFile bad("bad.tsv", "ላም\tላም\n");
  auto r = run({"evaluate", "--corpus", bad.path()});
  EXPECT_EQ(r.code, cli::kExitData);
  EXPECT_NE(r.err.find(":1:"), std::string::npos);
}

TEST(Cli, DataDirectory) {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / ("ametaphone_data_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  for (const char* f : {"script.tbl", "phonetic.profile"}) {
    fs::copy_file(data(f), dir / f, fs::copy_options::overwrite_existing);
  }
  {
    std::ofstream glyph(dir / "glyph.tbl");
    glyph << "[glyph]\nፕ ኝ initial\n";
  }
  auto builtin = run({"encode", "አውሮፕላን"}).out;
  auto same = run({"--data-dir", data(""), "encode", "አውሮፕላን"}).out;
  EXPECT_EQ(builtin, same);
  auto initial_only = run({"--data-dir", dir.string(), "encode", "አውሮፕላን"}).out;
  EXPECT_EQ(initial_only, "አውሮፕላን\t0\tአውርፕልን\n");
  EXPECT_NE(builtin, initial_only);

  ::setenv(cli::kDataDirEnv, dir.string().c_str(), 1);
  EXPECT_EQ(run({"encode", "አውሮፕላን"}).out, initial_only);
  ::setenv(cli::kDataDirEnv, "/nonexistent/ametaphone", 1);
  EXPECT_EQ(run({"encode", "አውሮፕላን"}).code, cli::kExitData);
  ::unsetenv(cli::kDataDirEnv);
  fs::remove_all(dir);
}

TEST(Cli, OutputIsStable) {
  std::vector<std::string> args = {"evaluate", "--corpus", data("appendix.tsv")};
  EXPECT_EQ(run(args).out, run(args).out);
  auto text = golden("running_text.txt");
  EXPECT_EQ(run({"encode", "--stdin"}, text).out, run({"encode", "--stdin"}, text).out);
}

TEST(Cli, Help) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("evaluate"), std::string::npos);
}

}  // namespace
}  // namespace ametaphone
