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

#include <array>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "ametaphone/data_file.hpp"
#include "ametaphone/encoder.hpp"
#include "ametaphone/error.hpp"
#include "ametaphone/lexicon.hpp"
#include "ametaphone/utf8.hpp"

namespace ametaphone {

inline constexpr int kErrorTypeCount = 9;

inline constexpr std::array<std::string_view, kErrorTypeCount> kErrorTypeNames{
    "syllographic redundancy",
    "glypheme misidentification",
    "false ge'ezisms",
    "assimilations and alternations",
    "abbreviations and elisions",
    "disjoint labiovelars",
    "dialect variations",
    "foreign transcription",
    "mistrikes",
};

struct CorpusEntry {
  std::u32string canonical;
  std::u32string variant;
  int error_type = 1;
  // Derived forms the encoder is not expected to match (no stemming).
  bool expected_fail = false;
  std::size_t line = 0;
};

// Tab-separated: canonical, variant, type 1-9, optional flags
// ("expected_fail"). Blank lines and '#' lines are skipped.
inline std::vector<CorpusEntry> parse_corpus(std::string_view text,
                                             const std::string& source = "<corpus>") {
  std::vector<CorpusEntry> out;
  detail::for_each_data_line(text, [&](std::size_t line, std::string_view raw) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      auto tab = raw.find('\t', start);
      fields.push_back(raw.substr(start, tab == std::string_view::npos ? std::string_view::npos
                                                                       : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() < 3 || fields.size() > 4) {
      throw LoadError(source, line, "expected canonical<TAB>variant<TAB>type[<TAB>flags]");
    }
    CorpusEntry e;
    e.line = line;
    e.canonical = detail::parse_word(data_file::trim(fields[0]), source, line);
    e.variant = detail::parse_word(data_file::trim(fields[1]), source, line);
    auto type = data_file::trim(fields[2]);
    if (type.size() != 1 || type[0] < '1' || type[0] > '9') {
      throw LoadError(source, line, "error type must be 1-9");
    }
    e.error_type = type[0] - '0';
    if (fields.size() == 4) {
      auto flags = data_file::trim(fields[3]);
      if (flags == "expected_fail") {
        e.expected_fail = true;
      } else if (!flags.empty()) {
        throw LoadError(source, line, "unknown flag '" + std::string(flags) + "'");
      }
    }
    out.push_back(std::move(e));
  });
  return out;
}

inline std::vector<CorpusEntry> load_corpus(const std::string& path) {
  return parse_corpus(data_file::read_file(path), path);
}

// Zero distance after encoding: the two words share at least one key.
inline bool matches(std::u32string_view canonical, std::u32string_view variant,
                    const Encoder& encoder) {
  return encoder.encode(canonical).intersects(encoder.encode(variant));
}

inline bool matches(std::string_view canonical, std::string_view variant, const Encoder& encoder) {
  return encoder.encode(canonical).intersects(encoder.encode(variant));
}

struct Tally {
  std::size_t total = 0;
  std::size_t matched = 0;

  double rate() const { return total == 0 ? 0.0 : static_cast<double>(matched) / total; }
  bool operator==(const Tally&) const = default;
};

// Per-type and overall tallies cover in-scope entries only; expected_fail
// entries are tallied on their own, and all_entries covers both.
struct EvalReport {
  std::array<Tally, kErrorTypeCount> per_type{};
  Tally overall;
  Tally expected_fail;
  Tally all_entries;
  // Entries whose variant already equals the canonical spelling.
  std::size_t exact_match_baseline = 0;
  std::vector<CorpusEntry> unmatched;

  bool wy_as_vowels = false;
  bool input_method_profile = false;
  std::size_t max_encodings = 0;
  std::string fingerprint;

  const Tally& type(int error_type) const {
    return per_type[static_cast<std::size_t>(error_type - 1)];
  }
};

inline EvalReport evaluate(const std::vector<CorpusEntry>& corpus, const Encoder& encoder) {
  if (corpus.empty()) throw EmptyCorpus();
  EvalReport r;
  r.wy_as_vowels = encoder.config().wy_as_vowels;
  r.input_method_profile = encoder.config().input_method_profile.has_value();
  r.max_encodings = encoder.config().max_encodings;
  r.fingerprint = encoder.fingerprint();
  for (const auto& e : corpus) {
    bool hit = matches(e.canonical, e.variant, encoder);
    auto count = [hit](Tally& t) {
      ++t.total;
      if (hit) ++t.matched;
    };
    count(r.all_entries);
    if (e.expected_fail) {
      count(r.expected_fail);
    } else {
      count(r.per_type[static_cast<std::size_t>(e.error_type - 1)]);
      count(r.overall);
    }
    if (!hit) r.unmatched.push_back(e);
    if (e.canonical == e.variant) ++r.exact_match_baseline;
  }
  return r;
}

// How many variants get their canonical word back from suggest().
inline Tally suggestion_recall(const std::vector<CorpusEntry>& corpus, const EncodingIndex& index,
                               const Encoder& encoder, std::size_t limit) {
  Tally t;
  for (const auto& e : corpus) {
    ++t.total;
    for (const auto& s : suggest(std::u32string_view(e.variant), index, encoder, limit)) {
      if (s.word == e.canonical) {
        ++t.matched;
        break;
      }
    }
  }
  return t;
}

namespace detail {

inline std::string fixed(double v, int digits) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

inline std::string pad_left(std::string s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

inline std::string pad_right(std::string s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

inline std::string tally_row(const std::string& label, const Tally& t) {
  return pad_right(label, 38) + pad_left(std::to_string(t.matched), 8) +
         pad_left(std::to_string(t.total), 8) + pad_left(fixed(100.0 * t.rate(), 1) + "%", 9) +
         '\n';
}

}  // namespace detail

inline std::string format_text(const EvalReport& r) {
  std::string out;
  out += "config: wy_as_vowels=" + std::string(r.wy_as_vowels ? "on" : "off") +
         " input_method_profile=" + (r.input_method_profile ? "on" : "off") +
         " max_encodings=" + std::to_string(r.max_encodings) + " fingerprint=" + r.fingerprint +
         "\n\n";
  out += detail::pad_right("error type", 38) + detail::pad_left("matched", 8) +
         detail::pad_left("total", 8) + detail::pad_left("rate", 9) + '\n';
  for (int t = 1; t <= kErrorTypeCount; ++t) {
    const auto& tally = r.type(t);
    if (tally.total == 0) continue;
    out += detail::tally_row(std::to_string(t) + "  " +
                                 std::string(kErrorTypeNames[static_cast<std::size_t>(t - 1)]),
                             tally);
  }
  out += detail::tally_row("overall", r.overall);
  out += detail::tally_row("expected_fail (derived forms)", r.expected_fail);
  out += detail::tally_row("all entries", r.all_entries);
  out += detail::tally_row("exact-match baseline",
                           Tally{r.all_entries.total, r.exact_match_baseline});
  if (!r.unmatched.empty()) {
    out += "\nunmatched:\n";
    for (const auto& e : r.unmatched) {
      out += "  " + std::to_string(e.error_type) + '\t' + utf8::encode(e.canonical) + '\t' +
             utf8::encode(e.variant) + (e.expected_fail ? "\texpected_fail" : "") + '\n';
    }
  }
  return out;
}

inline std::string format_kv(const EvalReport& r) {
  std::string out;
  auto kv = [&](const std::string& k, const std::string& v) { out += k + '=' + v + '\n'; };
  kv("total", std::to_string(r.overall.total));
  kv("matched", std::to_string(r.overall.matched));
  kv("rate", detail::fixed(r.overall.rate(), 4));
  for (int t = 1; t <= kErrorTypeCount; ++t) {
    const auto& tally = r.type(t);
    auto prefix = "type." + std::to_string(t) + '.';
    kv(prefix + "total", std::to_string(tally.total));
    kv(prefix + "matched", std::to_string(tally.matched));
  }
  kv("expected_fail.total", std::to_string(r.expected_fail.total));
  kv("expected_fail.matched", std::to_string(r.expected_fail.matched));
  kv("all.total", std::to_string(r.all_entries.total));
  kv("all.matched", std::to_string(r.all_entries.matched));
  kv("baseline.exact.matched", std::to_string(r.exact_match_baseline));
  kv("config.wy_as_vowels", r.wy_as_vowels ? "1" : "0");
  kv("config.input_method_profile", r.input_method_profile ? "1" : "0");
  kv("config.max_encodings", std::to_string(r.max_encodings));
  kv("config.fingerprint", r.fingerprint);
  return out;
}

}  // namespace ametaphone
