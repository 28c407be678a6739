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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ametaphone/distance.hpp"
#include "ametaphone/lexicon.hpp"
#include "test_util.hpp"

namespace ametaphone {
namespace {

using testing::TempFile;
using testing::u32;
using testing::u8;

std::vector<std::string> words_of(const std::vector<Suggestion>& s) {
  std::vector<std::string> out;
  for (const auto& x : s) out.push_back(u8(x.word));
  return out;
}

bool has(const std::vector<std::string>& v, const std::string& w) {
  return std::find(v.begin(), v.end(), w) != v.end();
}

TEST(LoadLexicon, Examples) {
  TempFile two("two.txt", "ላም\nሎሚ\n");
  auto lex = load_lexicon(two.path());
  EXPECT_EQ(lex.size(), 2U);
  EXPECT_TRUE(lex.contains(U"ላም"));
  EXPECT_TRUE(lex.contains(U"ሎሚ"));

  TempFile dup("dup.txt", "ላም\nላም\n");
  EXPECT_EQ(load_lexicon(dup.path()).size(), 1U);
}

TEST(LoadLexicon, CommentsBlanksAndLineEndings) {
  auto lex = Lexicon::parse("\xEF\xBB\xBF# words\n\nላም\r\n  ሎሚ  \n\t\n# ለም\n");
  EXPECT_EQ(lex.size(), 2U);
  EXPECT_FALSE(lex.contains(U"ለም"));
  EXPECT_TRUE(Lexicon::parse("").empty());
}

TEST(LoadLexicon, ErrorsCarryLine) {
  TempFile bad("bad.txt", "ላም\n# ok\nlam\n");
  try {
    load_lexicon(bad.path());
    FAIL();
  } catch (const LoadError& e) {
    EXPECT_EQ(e.line(), 3U);
    EXPECT_EQ(e.source(), bad.path());
  }
  try {
    Lexicon::parse("ላም\n\xE1\x88\n");
    FAIL();
  } catch (const LoadError& e) {
    EXPECT_EQ(e.line(), 2U);
  }
  EXPECT_THROW(Lexicon::parse("ላም ሎሚ\n"), LoadError);
  EXPECT_THROW(Lexicon::parse("ላም።\n"), LoadError);
  EXPECT_THROW(load_lexicon("/nonexistent/ametaphone/lexicon.txt"), LoadError);
}

TEST(BuildIndex, Examples) {
  Encoder e;
  auto one = build_index(Lexicon::from_words(std::vector<std::string>{"ላም"}), e);
  ASSERT_EQ(one.key_count(), 1U);
  ASSERT_TRUE(one.lookup(U"ልም"));
  EXPECT_EQ(*one.lookup(U"ልም"), (std::vector<Posting>{{U"ላም", Tier::kCanonical}}));

  EXPECT_TRUE(build_index(Lexicon{}, e).empty());

  auto lomi = build_index(Lexicon::from_words(std::vector<std::string>{"ሎሚ"}), e);
  ASSERT_TRUE(lomi.lookup(U"ልም"));
  EXPECT_EQ(lomi.lookup(U"ልም")->front().word, U"ሎሚ");
}

TEST(BuildIndex, EveryKeyOfEveryWord) {
  Encoder e;
  auto lex = Lexicon::load(testing::source_path("data/lexicon.txt"));
  auto index = build_index(lex, e);
  for (const auto& w : lex.words()) {
    auto set = e.encode(w);
    for (const auto& enc : set) {
      const auto* postings = index.lookup(enc.key);
      ASSERT_TRUE(postings) << u8(w);
      auto it = std::find_if(postings->begin(), postings->end(),
                             [&](const Posting& p) { return p.word == w; });
      ASSERT_NE(it, postings->end()) << u8(w);
      EXPECT_EQ(it->tier, enc.tier);
    }
  }
}

TEST(Suggest, Examples) {
  Encoder e;
  auto index = build_index(
      Lexicon::from_words(std::vector<std::string>{"ላም", "ሎሚ", "ለም", "ልማ"}), e);
  auto hits = words_of(suggest("ሊም", index, e, 10));
  EXPECT_TRUE(has(hits, "ላም"));
  EXPECT_TRUE(has(hits, "ሎሚ"));
  EXPECT_EQ(hits.size(), 4U);

  auto self = build_index(Lexicon::from_words(std::vector<std::string>{"ላም"}), e);
  EXPECT_EQ(suggest("ላም", self, e, 10), (std::vector<Suggestion>{{U"ላም", Tier::kCanonical, 0}}));

  auto tewat = build_index(Lexicon::from_words(std::vector<std::string>{"ጠዋት"}), e);
  EXPECT_TRUE(has(words_of(suggest("ጧት", tewat, e, 10)), "ጠዋት"));
}

TEST(Suggest, RankingAndLimit) {
  Encoder e;
  auto index = build_index(
      Lexicon::from_words(std::vector<std::string>{"ላም", "ሎሚ", "ለም", "ልማ", "ፕሬዚዳንት"}), e);
  auto hits = suggest("ሊም", index, e, 10);
  // ላም and ለም are one edit away; ልማ and ሎሚ two.
  EXPECT_EQ(words_of(hits), (std::vector<std::string>{"ለም", "ላም", "ልማ", "ሎሚ"}));
  EXPECT_EQ(hits[0].distance, 1U);
  EXPECT_EQ(hits[3].distance, 2U);
  EXPECT_EQ(words_of(suggest("ሊም", index, e, 1)), (std::vector<std::string>{"ለም"}));

  // Glyph-tier match ranks after nothing better, and reports its tier.
  auto pres = suggest("ኘሬዚዳንት", index, e, 10);
  ASSERT_EQ(pres.size(), 1U);
  EXPECT_EQ(pres[0].match_tier, Tier::kGlyph);

  EXPECT_TRUE(suggest("ቤት", index, e, 10).empty());
}

TEST(Suggest, Errors) {
  Encoder e;
  auto index = build_index(Lexicon::from_words(std::vector<std::string>{"ላም"}), e);
  EXPECT_THROW(suggest("ላም", index, e, 0), Error);
  EXPECT_THROW(suggest("", index, e, 1), EmptyWord);
  EncoderConfig wy;
  wy.wy_as_vowels = true;
  EXPECT_THROW(suggest("ላም", index, Encoder(wy), 1), ConfigMismatch);
}

TEST(Suggest, SelfLookupComesFirst) {
  Encoder e;
  auto lex = Lexicon::load(testing::source_path("data/lexicon.txt"));
  for (const auto& w : lex.words()) {
    auto index = build_index(Lexicon::from_words(std::vector<std::string>{u8(w)}), e);
    auto hits = suggest(std::u32string_view(w), index, e, 1);
    ASSERT_EQ(hits.size(), 1U);
    EXPECT_EQ(hits[0], (Suggestion{w, Tier::kCanonical, 0}));
  }
}

TEST(IndexDump, RoundTrips) {
  Encoder e;
  auto index = build_index(Lexicon::load(testing::source_path("data/lexicon.txt")), e);
  auto text = index.dump();
  EXPECT_EQ(text.rfind("# ametaphone-index 1\n# fingerprint " + e.fingerprint() + "\n", 0), 0U);
  auto back = EncodingIndex::parse(text);
  EXPECT_EQ(back.entries(), index.entries());
  EXPECT_EQ(back.fingerprint(), index.fingerprint());
  EXPECT_EQ(back.dump(), text);
  EXPECT_EQ(words_of(suggest("ሊም", back, e, 3)), words_of(suggest("ሊም", index, e, 3)));
}

TEST(IndexDump, RejectsBadInput) {
  EXPECT_THROW(EncodingIndex::parse(""), LoadError);
  EXPECT_THROW(EncodingIndex::parse("# ametaphone-index 2\n# fingerprint x\n"), LoadError);
  EXPECT_THROW(EncodingIndex::parse("# ametaphone-index 1\n"), LoadError);
  EXPECT_THROW(EncodingIndex::parse("# ametaphone-index 1\n# fingerprint \n"), LoadError);
  try {
    EncodingIndex::parse("# ametaphone-index 1\n# fingerprint x\nልም\tላም\t0\nልም\tላም\n");
    FAIL();
  } catch (const LoadError& e) {
    EXPECT_EQ(e.line(), 4U);
  }
  EXPECT_THROW(EncodingIndex::parse("# ametaphone-index 1\n# fingerprint x\nልም\tላም\t7\n"),
               LoadError);
  EXPECT_THROW(EncodingIndex::parse("# ametaphone-index 1\n# fingerprint x\nlm\tላም\t0\n"),
               LoadError);
}

std::size_t naive_distance(std::u32string_view a, std::u32string_view b) {
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();
  std::size_t sub = naive_distance(a.substr(1), b.substr(1)) + (a[0] != b[0] ? 1 : 0);
  std::size_t del = naive_distance(a.substr(1), b) + 1;
  std::size_t ins = naive_distance(a, b.substr(1)) + 1;
  return std::min({sub, del, ins});
}

TEST(Distance, Examples) {
  EXPECT_EQ(distance(U"ላም", U"ላም"), 0U);
  EXPECT_EQ(distance(U"ሊም", U"ላም"), 1U);
  EXPECT_EQ(distance(U"ጧት", U"ጠዋት"), 2U);
  EXPECT_EQ(naive_distance(U"ጧት", U"ጠዋት"), 2U);
  EXPECT_EQ(distance(U"", U"ላም"), 2U);
}

std::u32string random_word(std::mt19937& rng, std::size_t max_len) {
  // Small alphabet so that collisions and overlaps are common.
  static const std::u32string kAlphabet = U"ለላልመምሙጠዋ";
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, kAlphabet.size() - 1);
  std::u32string w(len(rng), U' ');
  for (auto& c : w) c = kAlphabet[pick(rng)];
  return w;
}

TEST(Distance, MatchesNaiveOracle) {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    auto a = random_word(rng, 6);
    auto b = random_word(rng, 6);
    EXPECT_EQ(distance(a, b), naive_distance(a, b)) << u8(a) << " / " << u8(b);
  }
}

TEST(Distance, IsAMetric) {
  std::mt19937 rng(20260101);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_word(rng, 6);
    auto b = random_word(rng, 6);
    auto c = random_word(rng, 6);
    EXPECT_EQ(distance(a, a), 0U);
    EXPECT_EQ(distance(a, b) == 0, a == b);
    EXPECT_EQ(distance(a, b), distance(b, a));
    EXPECT_LE(distance(a, c), distance(a, b) + distance(b, c));
  }
}

}  // namespace
}  // namespace ametaphone
