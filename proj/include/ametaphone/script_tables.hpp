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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ametaphone/data_file.hpp"
#include "ametaphone/default_data.hpp"
#include "ametaphone/error.hpp"
#include "ametaphone/script.hpp"
#include "ametaphone/utf8.hpp"

namespace ametaphone {

namespace detail {

// A table token naming exactly one syllable.
inline char32_t parse_glyph(const std::string& token, const data_file::Record& rec,
                            const std::string& source) {
  auto cps = utf8::decode(token);
  if (!cps || cps->size() != 1 || !is_syllable((*cps)[0])) {
    throw LoadError(source, rec.line, "expected one Ethiopic syllable, got '" + token + "'");
  }
  return (*cps)[0];
}

inline FamilyId parse_family(const std::string& token, const data_file::Record& rec,
                             const std::string& source) {
  return *family_of(parse_glyph(token, rec, source));
}

inline int parse_order(const std::string& token, const data_file::Record& rec,
                       const std::string& source) {
  int value = 0;
  for (char c : token) {
    if (c < '0' || c > '9' || value > order::kMax) {
      throw LoadError(source, rec.line, "bad order '" + token + "'");
    }
    value = value * 10 + (c - '0');
  }
  if (token.empty() || value < 1 || value > order::kMax) {
    throw LoadError(source, rec.line, "bad order '" + token + "'");
  }
  return value;
}

inline void expect_arity(const data_file::Record& rec, std::size_t n,
                         const std::string& source) {
  if (rec.tokens.size() != n) {
    throw LoadError(source, rec.line,
                    "expected " + std::to_string(n) + " fields, got " +
                        std::to_string(rec.tokens.size()));
  }
}

}  // namespace detail

// Homophone classes, labiovelar map and vowel carriers. Immutable once
// loaded; all queries are const.
class ScriptTables {
 public:
  static ScriptTables parse(std::string_view text, std::string source = "<tables>") {
    return ScriptTables(data_file::parse(text, std::move(source)));
  }

  static ScriptTables load(const std::string& path) {
    return ScriptTables(data_file::load(path));
  }

  static const ScriptTables& builtin() {
    static const ScriptTables tables = parse(defaults::kScriptTables, "<builtin script.tbl>");
    return tables;
  }

  const std::vector<std::vector<FamilyId>>& homophone_classes() const { return classes_; }

  FamilyId representative(FamilyId family) const {
    auto it = representative_.find(family);
    return it == representative_.end() ? family : it->second;
  }

  // Order a syllable of family `rep` takes after simplification.
  int fold_order(FamilyId rep, int ord) const {
    auto it = folds_.find({rep, ord});
    return it == folds_.end() ? ord : it->second;
  }

  // Base family of a standalone labiovelar row; the family itself otherwise.
  FamilyId base_family(FamilyId family) const {
    auto it = series_base_.find(family);
    return it == series_base_.end() ? family : it->second;
  }

  // Labiovelar row whose base is `family`, if any.
  std::optional<FamilyId> series_of(FamilyId family) const {
    for (const auto& [series, base] : series_base_) {
      if (base == family) return series;
    }
    return std::nullopt;
  }

  // Family whose sadis stands for `family` in an encoding key.
  FamilyId key_family(FamilyId family) const { return representative(base_family(family)); }

  bool is_vowel_carrier(char32_t ch) const {
    auto f = family_of(ch);
    return f && vowel_carriers_.count(base_family(*f)) != 0;
  }

  const std::set<FamilyId>& vowel_carriers() const { return vowel_carriers_; }

  LabiovelarKind classify_labiovelar(char32_t ch) const {
    auto info = decompose(ch);
    if (!info) return LabiovelarKind::kNone;
    if (info->order == order::kEighth || info->order == order::kLabialFourth) {
      return LabiovelarKind::kFourthOrderWa;
    }
    if (info->order >= order::kLabialFirst && info->order <= order::kLabialSixth) {
      return LabiovelarKind::kOther;
    }
    return LabiovelarKind::kNone;
  }

  // Every labiovelar codepoint with the family it reduces to and its kind.
  std::map<char32_t, std::pair<FamilyId, LabiovelarKind>> labiovelar_map() const {
    std::map<char32_t, std::pair<FamilyId, LabiovelarKind>> out;
    for (const auto& rec : all_syllables()) {
      auto kind = classify_labiovelar(rec.codepoint);
      if (kind != LabiovelarKind::kNone) {
        out.emplace(rec.codepoint, std::pair{base_family(FamilyId{rec.family}), kind});
      }
    }
    return out;
  }

  // Sixth-order member of ch's base family (labiovelars reduce to the
  // family they labialize).
  char32_t to_sadis(char32_t ch) const {
    auto info = decompose(ch);
    if (!info) throw InvalidInput(0, ch);
    return compose(base_family(info->family), order::kSadis);
  }

  // Canonical serialization, used to fingerprint encoder configurations.
  std::string fingerprint() const {
    std::string out = "h:";
    for (const auto& cls : classes_) {
      for (auto f : cls) out += utf8::encode(f.base);
      out += ';';
    }
    out += "f:";
    for (const auto& [key, to] : folds_) {
      out += utf8::encode(key.first.base) + std::to_string(key.second) + '>' +
             std::to_string(to) + ';';
    }
    out += "l:";
    for (const auto& [s, b] : series_base_) out += utf8::encode(s.base) + utf8::encode(b.base);
    out += ";v:";
    for (auto f : vowel_carriers_) out += utf8::encode(f.base);
    return out;
  }

 private:
  explicit ScriptTables(const data_file::Document& doc) {
    const auto& src = doc.source;
    for (const auto& section : doc.sections) {
      if (section.name == "homophones") {
        load_homophones(section, src);
      } else if (section.name == "order-folds") {
        load_folds(section, src);
      } else if (section.name == "labiovelar") {
        load_labiovelar(section, src);
      } else if (section.name == "vowel-carriers") {
        for (const auto& rec : section.records) {
          for (const auto& tok : rec.tokens) {
            auto f = detail::parse_family(tok, rec, src);
            if (is_labiovelar_series(f)) {
              throw LoadError(src, rec.line, "vowel carrier must be a regular family");
            }
            vowel_carriers_.insert(f);
          }
        }
      } else {
        throw LoadError(src, section.line, "unknown section [" + section.name + "]");
      }
    }
    for (const auto& rec : all_syllables()) {
      FamilyId f{rec.family};
      if (is_labiovelar_series(f) && series_base_.count(f) == 0) {
        throw LoadError(src, 0, "labiovelar row " + utf8::encode(f.base) + " has no base family");
      }
    }
    for (const auto& [key, to] : folds_) {
      (void)to;
      if (representative_.count(key.first) && representative(key.first) != key.first) {
        throw LoadError(src, 0, "order fold on non-representative " + utf8::encode(key.first.base));
      }
    }
  }

  void load_homophones(const data_file::Section& section, const std::string& src) {
    for (const auto& rec : section.records) {
      if (rec.tokens.size() < 2) throw LoadError(src, rec.line, "class needs at least two families");
      std::vector<FamilyId> cls;
      for (const auto& tok : rec.tokens) {
        auto f = detail::parse_family(tok, rec, src);
        if (is_labiovelar_series(f)) {
          throw LoadError(src, rec.line, "labiovelar rows belong in [labiovelar]");
        }
        if (representative_.count(f)) {
          throw LoadError(src, rec.line, "family " + tok + " is already in a class");
        }
        representative_.emplace(f, cls.empty() ? f : cls.front());
        cls.push_back(f);
      }
      classes_.push_back(std::move(cls));
    }
  }

  void load_folds(const data_file::Section& section, const std::string& src) {
    for (const auto& rec : section.records) {
      detail::expect_arity(rec, 3, src);
      auto f = detail::parse_family(rec.tokens[0], rec, src);
      int from = detail::parse_order(rec.tokens[1], rec, src);
      int to = detail::parse_order(rec.tokens[2], rec, src);
      if (!try_compose(f, from) || !try_compose(f, to)) {
        throw LoadError(src, rec.line, "order not populated in family " + rec.tokens[0]);
      }
      if (!folds_.emplace(std::pair{f, from}, to).second) {
        throw LoadError(src, rec.line, "duplicate order fold");
      }
    }
  }

  void load_labiovelar(const data_file::Section& section, const std::string& src) {
    for (const auto& rec : section.records) {
      detail::expect_arity(rec, 2, src);
      auto series = detail::parse_family(rec.tokens[0], rec, src);
      auto base = detail::parse_family(rec.tokens[1], rec, src);
      if (!is_labiovelar_series(series)) {
        throw LoadError(src, rec.line, rec.tokens[0] + " is not a labiovelar row");
      }
      if (!try_compose(base, order::kSadis) || is_labiovelar_series(base)) {
        throw LoadError(src, rec.line, rec.tokens[1] + " has no sadis form");
      }
      if (!series_base_.emplace(series, base).second) {
        throw LoadError(src, rec.line, "duplicate labiovelar row " + rec.tokens[0]);
      }
    }
  }

  std::vector<std::vector<FamilyId>> classes_;
  std::map<FamilyId, FamilyId> representative_;
  std::map<std::pair<FamilyId, int>, int> folds_;
  std::map<FamilyId, FamilyId> series_base_;
  std::set<FamilyId> vowel_carriers_;
};

}  // namespace ametaphone
