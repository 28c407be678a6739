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
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ametaphone/data_file.hpp"
#include "ametaphone/default_data.hpp"
#include "ametaphone/error.hpp"
#include "ametaphone/script.hpp"
#include "ametaphone/script_tables.hpp"
#include "ametaphone/utf8.hpp"

namespace ametaphone {

namespace glyphs {
inline constexpr char32_t kAlef = U'አ';
inline constexpr char32_t kMe = U'ም';
inline constexpr char32_t kNe = U'ን';
inline constexpr char32_t kBe = U'ብ';
inline constexpr char32_t kFe = U'ፍ';
inline constexpr char32_t kWe = U'ው';
inline constexpr FamilyId kWaFamily{U'ወ'};
inline constexpr FamilyId kYaFamily{U'የ'};
}  // namespace glyphs

namespace detail {

inline std::u32string decode_or_throw(std::string_view text) {
  auto cps = utf8::decode(text);
  if (!cps) throw Error("malformed UTF-8 in '" + std::string(text) + "'");
  return std::move(*cps);
}

// FNV-1a, stable across platforms so fingerprints can be persisted.
inline std::string fnv1a_hex(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace detail

// Shift-slip pairs of one input method. Lowest-common-denominator
// encoding rewrites uppercase families to their lowercase partner.
class MistrikeProfile {
 public:
  struct Pair {
    FamilyId upper;
    FamilyId lower;
  };

  static MistrikeProfile parse(std::string_view text, std::string source = "<profile>") {
    return MistrikeProfile(data_file::parse(text, std::move(source)));
  }

  static MistrikeProfile load(const std::string& path) {
    return MistrikeProfile(data_file::load(path));
  }

  // Shift pairs of the common phonetic keyboards.
  static const MistrikeProfile& phonetic() {
    static const MistrikeProfile profile =
        parse(defaults::kPhoneticProfile, "<builtin phonetic.profile>");
    return profile;
  }

  const std::vector<Pair>& pairs() const { return pairs_; }

  // Lowercase partner of an uppercase family, if the family is one.
  std::optional<FamilyId> lower_of(FamilyId family) const {
    for (const auto& p : pairs_) {
      if (p.upper == family) return p.lower;
    }
    return std::nullopt;
  }

  std::string fingerprint() const {
    std::string out = "m:";
    for (const auto& p : pairs_) out += utf8::encode(p.upper.base) + utf8::encode(p.lower.base);
    return out;
  }

 private:
  explicit MistrikeProfile(const data_file::Document& doc) {
    for (const auto& section : doc.sections) {
      if (section.name != "mistrike") {
        throw LoadError(doc.source, section.line, "unknown section [" + section.name + "]");
      }
      for (const auto& rec : section.records) {
        detail::expect_arity(rec, 2, doc.source);
        Pair p{detail::parse_family(rec.tokens[0], rec, doc.source),
               detail::parse_family(rec.tokens[1], rec, doc.source)};
        if (p.upper == p.lower) throw LoadError(doc.source, rec.line, "pair maps a family to itself");
        for (const auto& q : pairs_) {
          if (q.upper == p.upper) {
            throw LoadError(doc.source, rec.line, rec.tokens[0] + " is already an uppercase member");
          }
          if (q.upper == p.lower && q.lower == p.upper) {
            throw LoadError(doc.source, rec.line, "pair repeats in reverse");
          }
        }
        if (!try_compose(p.lower, order::kSadis)) {
          throw LoadError(doc.source, rec.line, rec.tokens[1] + " has no sadis form");
        }
        pairs_.push_back(p);
      }
    }
  }

  std::vector<Pair> pairs_;
};

// Glyph-confusion pairs over sadis keys; alternates go both ways.
class GlyphPairs {
 public:
  enum class Scope { kInitial, kAny };

  struct Pair {
    char32_t first;
    char32_t second;
    Scope scope;
  };

  static GlyphPairs parse(std::string_view text, std::string source = "<glyph pairs>") {
    return GlyphPairs(data_file::parse(text, std::move(source)));
  }

  static GlyphPairs load(const std::string& path) { return GlyphPairs(data_file::load(path)); }

  static const GlyphPairs& builtin() {
    static const GlyphPairs pairs = parse(defaults::kGlyphPairs, "<builtin glyph.tbl>");
    return pairs;
  }

  const std::vector<Pair>& pairs() const { return pairs_; }

  // Partner of `ch` at key position `pos`, or 0.
  char32_t partner(char32_t ch, std::size_t pos) const {
    for (const auto& p : pairs_) {
      if (p.scope == Scope::kInitial && pos != 0) continue;
      if (p.first == ch) return p.second;
      if (p.second == ch) return p.first;
    }
    return 0;
  }

  std::string fingerprint() const {
    std::string out = "g:";
    for (const auto& p : pairs_) {
      out += utf8::encode(p.first) + utf8::encode(p.second) +
             (p.scope == Scope::kInitial ? "i;" : "a;");
    }
    return out;
  }

 private:
  explicit GlyphPairs(const data_file::Document& doc) {
    for (const auto& section : doc.sections) {
      if (section.name != "glyph") {
        throw LoadError(doc.source, section.line, "unknown section [" + section.name + "]");
      }
      for (const auto& rec : section.records) {
        detail::expect_arity(rec, 3, doc.source);
        Pair p{detail::parse_glyph(rec.tokens[0], rec, doc.source),
               detail::parse_glyph(rec.tokens[1], rec, doc.source), Scope::kAny};
        if (rec.tokens[2] == "initial") {
          p.scope = Scope::kInitial;
        } else if (rec.tokens[2] != "any") {
          throw LoadError(doc.source, rec.line, "scope must be 'initial' or 'any'");
        }
        for (char32_t g : {p.first, p.second}) {
          if (decompose(g)->order != order::kSadis) {
            throw LoadError(doc.source, rec.line, "glyph pairs operate on sadis keys");
          }
          for (const auto& q : pairs_) {
            if (q.first == g || q.second == g) {
              throw LoadError(doc.source, rec.line, "glyph already paired");
            }
          }
        }
        if (p.first == p.second) throw LoadError(doc.source, rec.line, "glyph paired with itself");
        pairs_.push_back(p);
      }
    }
  }

  std::vector<Pair> pairs_;
};

struct EncoderConfig {
  bool wy_as_vowels = false;
  // std::nullopt disables the input-method step.
  std::optional<MistrikeProfile> input_method_profile = MistrikeProfile::phonetic();
  std::size_t max_encodings = 16;
};

enum class Tier : std::uint8_t { kCanonical = 0, kPhonological = 1, kGlyph = 2, kInputMethod = 3 };

inline constexpr int to_int(Tier t) { return static_cast<int>(t); }

struct Encoding {
  std::u32string key;
  Tier tier = Tier::kCanonical;

  std::string key_utf8() const { return utf8::encode(key); }
  bool operator==(const Encoding&) const = default;
};

// Keys of one word in non-decreasing tier order, unique by key.
class EncodingSet {
 public:
  explicit EncodingSet(std::size_t capacity) : capacity_(capacity) {}

  // False when the key is a duplicate or the set is full.
  bool add(std::u32string key, Tier tier) {
    if (full() || contains(key)) return false;
    if (!encodings_.empty() && tier < encodings_.back().tier) {
      throw Error("encodings must be added in tier order");
    }
    encodings_.push_back({std::move(key), tier});
    return true;
  }

  bool contains(std::u32string_view key) const {
    return std::any_of(encodings_.begin(), encodings_.end(),
                       [&](const Encoding& e) { return e.key == key; });
  }

  std::optional<Tier> tier_of(std::u32string_view key) const {
    for (const auto& e : encodings_) {
      if (e.key == key) return e.tier;
    }
    return std::nullopt;
  }

  bool full() const { return encodings_.size() >= capacity_; }
  std::size_t size() const { return encodings_.size(); }
  bool empty() const { return encodings_.empty(); }
  const Encoding& operator[](std::size_t i) const { return encodings_[i]; }
  const Encoding& canonical() const { return encodings_.front(); }
  auto begin() const { return encodings_.begin(); }
  auto end() const { return encodings_.end(); }

  std::vector<std::u32string> keys() const {
    std::vector<std::u32string> out;
    for (const auto& e : encodings_) out.push_back(e.key);
    return out;
  }

  bool intersects(const EncodingSet& other) const {
    return std::any_of(encodings_.begin(), encodings_.end(),
                       [&](const Encoding& e) { return other.contains(e.key); });
  }

 private:
  std::vector<Encoding> encodings_;
  std::size_t capacity_;
};

namespace detail {

inline void push_unique(std::vector<std::u32string>& out, std::u32string key) {
  if (std::find(out.begin(), out.end(), key) == out.end()) out.push_back(std::move(key));
}

// Every non-empty combination of substitutions at `sites`, in mask order,
// capped at `limit` results.
inline std::vector<std::u32string> substitute_sites(
    const std::u32string& key, const std::vector<std::pair<std::size_t, char32_t>>& sites,
    std::size_t limit) {
  std::vector<std::u32string> out;
  if (sites.empty() || limit == 0) return out;
  // Beyond 63 sites the mask would overflow; the cap is hit long before.
  const std::size_t n = std::min<std::size_t>(sites.size(), 63);
  const std::uint64_t end = n == 63 ? ~0ull : (1ull << n);
  for (std::uint64_t mask = 1; mask < end && out.size() < limit; ++mask) {
    auto alt = key;
    for (std::size_t b = 0; b < n; ++b) {
      if (mask & (1ull << b)) alt[sites[b].first] = sites[b].second;
    }
    if (alt != key) push_unique(out, std::move(alt));
  }
  return out;
}

}  // namespace detail

inline constexpr std::size_t kUnlimited = static_cast<std::size_t>(-1);

// ም <-> ን before ብ or ፍ, every combination of sites, original excluded.
// The labial is matched by family, so unreduced input (ውምበር) works too.
inline std::vector<std::u32string> phonological_alternates(const std::u32string& key,
                                                           std::size_t limit = kUnlimited) {
  using namespace glyphs;
  static const auto kBeFamily = *family_of(kBe);
  static const auto kFeFamily = *family_of(kFe);
  std::vector<std::pair<std::size_t, char32_t>> sites;
  for (std::size_t i = 0; i + 1 < key.size(); ++i) {
    auto next = family_of(key[i + 1]);
    bool labial = next && (*next == kBeFamily || *next == kFeFamily);
    if (!labial) continue;
    if (key[i] == kMe) sites.emplace_back(i, kNe);
    if (key[i] == kNe) sites.emplace_back(i, kMe);
  }
  return detail::substitute_sites(key, sites, limit);
}

inline std::vector<std::u32string> glyph_alternates(const std::u32string& key,
                                                    const GlyphPairs& pairs = GlyphPairs::builtin(),
                                                    std::size_t limit = kUnlimited) {
  std::vector<std::pair<std::size_t, char32_t>> sites;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (char32_t p = pairs.partner(key[i], i)) sites.emplace_back(i, p);
  }
  return detail::substitute_sites(key, sites, limit);
}

// Rewrites every uppercase-family scalar to its lowercase partner's sadis.
inline std::u32string lcd_mistrike(const std::u32string& key, const MistrikeProfile& profile) {
  std::u32string out = key;
  for (auto& ch : out) {
    auto f = family_of(ch);
    if (!f) continue;
    if (auto lower = profile.lower_of(*f)) ch = compose(*lower, order::kSadis);
  }
  return out;
}

// The Amharic phonetic encoder: simplify, drop vowels, then add
// phonological, glyph and input-method alternates in that priority.
class Encoder {
 public:
  Encoder() : Encoder(EncoderConfig{}) {}

  explicit Encoder(EncoderConfig config, ScriptTables tables = ScriptTables::builtin(),
                   GlyphPairs glyph_pairs = GlyphPairs::builtin())
      : config_(std::move(config)), tables_(std::move(tables)), glyphs_(std::move(glyph_pairs)) {
    if (config_.max_encodings < 1) throw Error("max_encodings must be at least 1");
  }

  const EncoderConfig& config() const { return config_; }
  const ScriptTables& tables() const { return tables_; }
  const GlyphPairs& glyph_pairs() const { return glyphs_; }

  // Replaces each syllable by the same-order member of its homophone
  // representative. Labiovelar-row syllables whose representative has no
  // labiovelar row pass through; remove_vowels resolves them.
  std::u32string simplify(std::u32string_view word) const {
    std::u32string out;
    out.reserve(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
      auto info = decompose(word[i]);
      if (!info) throw InvalidInput(i, word[i]);
      out.push_back(simplify_one(*info));
    }
    return out;
  }

  std::u32string remove_vowels(std::u32string_view word) const {
    std::u32string key;
    for (std::size_t i = 0; i < word.size(); ++i) {
      auto info = decompose(word[i]);
      if (!info) throw InvalidInput(i, word[i]);
      if (tables_.is_vowel_carrier(word[i])) {
        if (i == 0) key.push_back(glyphs::kAlef);
        continue;
      }
      auto family = tables_.key_family(info->family);
      bool glide = family == glyphs::kWaFamily || family == glyphs::kYaFamily;
      if (!(config_.wy_as_vowels && glide && i > 0)) {
        key.push_back(compose(family, order::kSadis));
      }
      if (tables_.classify_labiovelar(word[i]) == LabiovelarKind::kFourthOrderWa &&
          !config_.wy_as_vowels) {
        key.push_back(glyphs::kWe);
      }
    }
    return key;
  }

  std::u32string canonical_key(std::u32string_view word) const {
    if (word.empty()) throw EmptyWord();
    return remove_vowels(simplify(word));
  }

  EncodingSet encode(std::u32string_view word) const {
    EncodingSet set(config_.max_encodings);
    set.add(canonical_key(word), Tier::kCanonical);
    const auto cap = config_.max_encodings;

    for (auto& k : phonological_alternates(set.canonical().key, cap)) {
      set.add(std::move(k), Tier::kPhonological);
    }
    auto prior = set.keys();
    for (const auto& base : prior) {
      if (set.full()) break;
      for (auto& k : glyph_alternates(base, glyphs_, cap)) set.add(std::move(k), Tier::kGlyph);
    }
    if (config_.input_method_profile) {
      prior = set.keys();
      for (const auto& base : prior) {
        auto lcd = lcd_mistrike(base, *config_.input_method_profile);
        if (lcd != base) set.add(std::move(lcd), Tier::kInputMethod);
      }
    }
    return set;
  }

  EncodingSet encode(std::string_view utf8_word) const {
    return encode(std::u32string_view(detail::decode_or_throw(utf8_word)));
  }
  EncodingSet encode(const char* utf8_word) const { return encode(std::string_view(utf8_word)); }

  // Stable digest of everything that determines the key space.
  std::string fingerprint() const {
    std::string s = tables_.fingerprint() + '|' + glyphs_.fingerprint() + '|' +
                    (config_.input_method_profile ? config_.input_method_profile->fingerprint()
                                                  : std::string("m:none")) +
                    "|wy:" + (config_.wy_as_vowels ? "1" : "0") +
                    "|max:" + std::to_string(config_.max_encodings);
    return detail::fnv1a_hex(s);
  }

 private:
  char32_t simplify_one(const SyllableInfo& info) const {
    if (is_labiovelar_series(info.family)) {
      auto base = tables_.base_family(info.family);
      auto rep = tables_.representative(base);
      if (rep == base) return info.codepoint;
      if (auto series = tables_.series_of(rep)) {
        if (char32_t cp = try_compose(*series, info.order)) return cp;
      }
      return info.codepoint;
    }
    auto rep = tables_.representative(info.family);
    if (char32_t cp = try_compose(rep, tables_.fold_order(rep, info.order))) return cp;
    if (char32_t cp = try_compose(rep, info.order)) return cp;
    return info.codepoint;
  }

  EncoderConfig config_;
  ScriptTables tables_;
  GlyphPairs glyphs_;
};

}  // namespace ametaphone
