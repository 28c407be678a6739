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
#include <optional>
#include <span>
#include <string>

#include "ametaphone/error.hpp"
#include "ametaphone/syllable.hpp"
#include "ametaphone/syllable_table.hpp"
#include "ametaphone/utf8.hpp"

namespace ametaphone {

inline constexpr char32_t kSyllabaryFirst = 0x1200;
inline constexpr char32_t kSyllabaryLast = 0x135A;

namespace detail {

inline constexpr std::size_t kSyllabarySize = kSyllabaryLast - kSyllabaryFirst + 1;
inline constexpr std::size_t kRowCount = kSyllabarySize / 8 + 1;

// Codepoint offset -> index into kSyllableTable, or -1 when unassigned.
inline constexpr auto kByCodepoint = [] {
  std::array<short, kSyllabarySize> index{};
  index.fill(-1);
  for (std::size_t i = 0; i < kSyllableTable.size(); ++i) {
    index[kSyllableTable[i].codepoint - kSyllabaryFirst] = static_cast<short>(i);
  }
  return index;
}();

// (family row, order) -> codepoint, or 0 when that order is unpopulated.
inline constexpr auto kByFamilyOrder = [] {
  std::array<std::array<char32_t, order::kMax + 1>, kRowCount> grid{};
  for (const auto& rec : kSyllableTable) {
    grid[(rec.family - kSyllabaryFirst) / 8][rec.order] = rec.codepoint;
  }
  return grid;
}();

}  // namespace detail

// Every syllable in the supported range, in codepoint order.
inline constexpr std::span<const detail::SyllableRecord> all_syllables() {
  return detail::kSyllableTable;
}

inline constexpr std::optional<SyllableInfo> decompose(char32_t ch) {
  if (ch < kSyllabaryFirst || ch > kSyllabaryLast) return std::nullopt;
  auto idx = detail::kByCodepoint[ch - kSyllabaryFirst];
  if (idx < 0) return std::nullopt;
  const auto& rec = detail::kSyllableTable[static_cast<std::size_t>(idx)];
  return SyllableInfo{FamilyId{rec.family}, rec.order, rec.codepoint};
}

inline constexpr bool is_syllable(char32_t ch) { return decompose(ch).has_value(); }

inline constexpr bool is_family(FamilyId family) {
  auto d = decompose(family.base);
  return d && d->family == family;
}

// Non-throwing compose; 0 when (family, order) is not populated.
inline constexpr char32_t try_compose(FamilyId family, int ord) {
  if (!is_family(family) || ord < 1 || ord > order::kMax) return 0;
  return detail::kByFamilyOrder[(family.base - kSyllabaryFirst) / 8]
                               [static_cast<std::size_t>(ord)];
}

inline char32_t compose(FamilyId family, int ord) {
  char32_t cp = try_compose(family, ord);
  if (cp == 0) {
    throw InvalidOrder("family " + utf8::encode(family.base) +
                       " has no order " + std::to_string(ord));
  }
  return cp;
}

// Family of any member glyph; std::nullopt for non-syllables.
inline constexpr std::optional<FamilyId> family_of(char32_t ch) {
  auto d = decompose(ch);
  if (!d) return std::nullopt;
  return d->family;
}

inline constexpr bool is_labiovelar_series(FamilyId family) {
  return try_compose(family, order::kFirst) == 0 &&
         try_compose(family, order::kLabialFourth) != 0;
}

}  // namespace ametaphone
