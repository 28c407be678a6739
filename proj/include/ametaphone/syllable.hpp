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

#include <compare>
#include <cstdint>

namespace ametaphone {

// Vocalic orders. 1-8 are the regular columns of a family row; the
// standalone labiovelar rows (ቈ, ኈ, ኰ, ...) use 9-13 and the three
// palatalized forms (ፘ, ፙ, ፚ) use 14.
namespace order {
inline constexpr int kFirst = 1;
inline constexpr int kFourth = 4;
inline constexpr int kSadis = 6;
inline constexpr int kSeventh = 7;
inline constexpr int kEighth = 8;  // -ʷa column (ሏ, ጧ) or -oa (ሇ, ቇ)
inline constexpr int kLabialFirst = 9;
inline constexpr int kLabialThird = 10;
inline constexpr int kLabialFourth = 11;
inline constexpr int kLabialFifth = 12;
inline constexpr int kLabialSixth = 13;
inline constexpr int kPalatal = 14;
inline constexpr int kMax = 14;
}  // namespace order

// Identifies a consonant family by the codepoint that starts its row.
struct FamilyId {
  char32_t base = 0;

  constexpr auto operator<=>(const FamilyId&) const = default;
};

struct SyllableInfo {
  FamilyId family;
  int order = 0;
  char32_t codepoint = 0;

  constexpr bool operator==(const SyllableInfo&) const = default;
};

enum class LabiovelarKind { kNone, kFourthOrderWa, kOther };

namespace detail {
struct SyllableRecord {
  char32_t codepoint;
  char32_t family;
  int order;
};
}  // namespace detail

}  // namespace ametaphone
