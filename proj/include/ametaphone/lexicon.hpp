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

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ametaphone/data_file.hpp"
#include "ametaphone/distance.hpp"
#include "ametaphone/encoder.hpp"
#include "ametaphone/error.hpp"
#include "ametaphone/script.hpp"
#include "ametaphone/utf8.hpp"

namespace ametaphone {

namespace detail {

// Decodes one field of a data line and checks it is all syllables.
inline std::u32string parse_word(std::string_view field, const std::string& source,
                                 std::size_t line) {
  auto cps = utf8::decode(field);
  if (!cps) throw LoadError(source, line, "malformed UTF-8");
  if (cps->empty()) throw LoadError(source, line, "empty word");
  for (char32_t c : *cps) {
    if (!is_syllable(c)) {
      throw LoadError(source, line, "not an Ethiopic word: '" + std::string(field) + "'");
    }
  }
  return std::move(*cps);
}

// Calls fn(line_number, content) for each non-blank, non-comment line.
template <typename Fn>
void for_each_data_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = text.substr(0, 3) == "\xEF\xBB\xBF" ? 3 : 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    auto content = data_file::trim(raw);
    if (content.empty() || content.front() == '#') continue;
    fn(line_no, raw);
  }
}

}  // namespace detail

// Canonical word list. Ethiopic syllables have no canonical decompositions,
// so every accepted word is already in NFC.
class Lexicon {
 public:
  Lexicon() = default;

  static Lexicon parse(std::string_view text, const std::string& source = "<lexicon>") {
    Lexicon lex;
    detail::for_each_data_line(text, [&](std::size_t line, std::string_view raw) {
      lex.words_.insert(detail::parse_word(data_file::trim(raw), source, line));
    });
    return lex;
  }

  static Lexicon load(const std::string& path) { return parse(data_file::read_file(path), path); }

  template <typename Range>
  static Lexicon from_words(const Range& words) {
    Lexicon lex;
    for (const auto& w : words) lex.insert(w);
    return lex;
  }

  void insert(std::string_view utf8_word) {
    words_.insert(detail::parse_word(utf8_word, "<word>", 0));
  }

  bool contains(std::u32string_view w) const { return words_.count(std::u32string(w)) != 0; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const std::set<std::u32string>& words() const { return words_; }

 private:
  std::set<std::u32string> words_;
};

inline Lexicon load_lexicon(const std::string& path) { return Lexicon::load(path); }

struct Posting {
  std::u32string word;
  Tier tier = Tier::kCanonical;

  bool operator==(const Posting&) const = default;
};

struct Suggestion {
  std::u32string word;
  Tier match_tier = Tier::kCanonical;
  std::size_t distance = 0;

  bool operator==(const Suggestion&) const = default;
};

// Encoding key -> lexicon words producing it. Immutable after build/load.
class EncodingIndex {
 public:
  static constexpr std::string_view kDumpHeader = "# ametaphone-index 1";

  static EncodingIndex build(const Lexicon& lexicon, const Encoder& encoder) {
    EncodingIndex index;
    index.fingerprint_ = encoder.fingerprint();
    for (const auto& word : lexicon.words()) {
      EncodingSet set = [&] {
        try {
          return encoder.encode(std::u32string_view(word));
        } catch (const Error& e) {
          throw Error("cannot index '" + utf8::encode(word) + "': " + e.what());
        }
      }();
      for (const auto& enc : set) index.insert(enc.key, word, enc.tier);
    }
    return index;
  }

  const std::string& fingerprint() const { return fingerprint_; }
  std::size_t key_count() const { return map_.size(); }
  bool empty() const { return map_.empty(); }

  const std::vector<Posting>* lookup(std::u32string_view key) const {
    auto it = map_.find(std::u32string(key));
    return it == map_.end() ? nullptr : &it->second;
  }

  const std::map<std::u32string, std::vector<Posting>>& entries() const { return map_; }

  // Sorted "key TAB word TAB tier" lines after a two-line header.
  void dump(std::ostream& out) const {
    out << kDumpHeader << '\n' << "# fingerprint " << fingerprint_ << '\n';
    for (const auto& [key, postings] : map_) {
      for (const auto& p : postings) {
        out << utf8::encode(key) << '\t' << utf8::encode(p.word) << '\t' << to_int(p.tier) << '\n';
      }
    }
  }

  std::string dump() const {
    std::ostringstream out;
    dump(out);
    return out.str();
  }

  static EncodingIndex parse(std::string_view text, const std::string& source = "<index>") {
    EncodingIndex index;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
      auto nl = text.find('\n', pos);
      auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      pos = nl == std::string_view::npos ? text.size() : nl + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line_no == 1) {
        if (line != kDumpHeader) throw LoadError(source, 1, "not an index dump (bad header)");
        continue;
      }
      if (line_no == 2) {
        constexpr std::string_view kPrefix = "# fingerprint ";
        if (line.substr(0, kPrefix.size()) != kPrefix || line.size() == kPrefix.size()) {
          throw LoadError(source, 2, "missing fingerprint");
        }
        index.fingerprint_ = std::string(line.substr(kPrefix.size()));
        continue;
      }
      if (line.empty()) continue;
      auto t1 = line.find('\t');
      auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
      if (t2 == std::string_view::npos || line.find('\t', t2 + 1) != std::string_view::npos) {
        throw LoadError(source, line_no, "expected key<TAB>word<TAB>tier");
      }
      auto key = detail::parse_word(line.substr(0, t1), source, line_no);
      auto word = detail::parse_word(line.substr(t1 + 1, t2 - t1 - 1), source, line_no);
      auto tier_field = line.substr(t2 + 1);
      if (tier_field.size() != 1 || tier_field[0] < '0' || tier_field[0] > '3') {
        throw LoadError(source, line_no, "tier must be 0-3");
      }
      index.insert(key, word, static_cast<Tier>(tier_field[0] - '0'));
    }
    if (line_no < 2) throw LoadError(source, line_no, "truncated index dump");
    return index;
  }

  static EncodingIndex load(const std::string& path) {
    return parse(data_file::read_file(path), path);
  }

 private:
  void insert(const std::u32string& key, const std::u32string& word, Tier tier) {
    auto& postings = map_[key];
    auto it = std::lower_bound(postings.begin(), postings.end(), word,
                               [](const Posting& p, const std::u32string& w) { return p.word < w; });
    if (it != postings.end() && it->word == word) {
      it->tier = std::min(it->tier, tier);
    } else {
      postings.insert(it, Posting{word, tier});
    }
  }

  std::string fingerprint_;
  std::map<std::u32string, std::vector<Posting>> map_;
};

inline EncodingIndex build_index(const Lexicon& lexicon, const Encoder& encoder) {
  return EncodingIndex::build(lexicon, encoder);
}

// Lexicon words sharing any key with the query, ranked by match tier,
// then edit distance, then word.
inline std::vector<Suggestion> suggest(std::u32string_view query, const EncodingIndex& index,
                                       const Encoder& encoder, std::size_t limit) {
  if (limit < 1) throw Error("suggestion limit must be at least 1");
  if (encoder.fingerprint() != index.fingerprint()) {
    throw ConfigMismatch("index fingerprint " + index.fingerprint() +
                         " does not match encoder " + encoder.fingerprint());
  }
  if (query.empty()) throw EmptyWord();
  const auto set = encoder.encode(query);
  std::map<std::u32string, Tier> best;
  for (const auto& enc : set) {
    const auto* postings = index.lookup(enc.key);
    if (!postings) continue;
    for (const auto& p : *postings) {
      Tier t = std::max(enc.tier, p.tier);
      auto [it, inserted] = best.emplace(p.word, t);
      if (!inserted) it->second = std::min(it->second, t);
    }
  }
  std::vector<Suggestion> out;
  out.reserve(best.size());
  for (const auto& [word, tier] : best) out.push_back({word, tier, distance(query, word)});
  std::sort(out.begin(), out.end(), [](const Suggestion& a, const Suggestion& b) {
    if (a.match_tier != b.match_tier) return a.match_tier < b.match_tier;
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.word < b.word;
  });
  if (out.size() > limit) out.resize(limit);
  return out;
}

inline std::vector<Suggestion> suggest(std::string_view utf8_query, const EncodingIndex& index,
                                       const Encoder& encoder, std::size_t limit) {
  auto q = detail::decode_or_throw(utf8_query);
  return suggest(std::u32string_view(q), index, encoder, limit);
}

}  // namespace ametaphone
