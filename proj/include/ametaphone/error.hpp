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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace ametaphone {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A word contained a scalar outside the supported Ethiopic syllabary.
class InvalidInput : public Error {
 public:
  InvalidInput(std::size_t position, char32_t scalar)
      : Error("non-Ethiopic scalar U+" + hex(scalar) + " at position " +
              std::to_string(position)),
        position_(position),
        scalar_(scalar) {}

  std::size_t position() const noexcept { return position_; }
  char32_t scalar() const noexcept { return scalar_; }

 private:
  static std::string hex(char32_t c) {
    static constexpr char kDigits[] = "0123456789ABCDEF";
    std::string out;
    for (int shift = 20; shift >= 0; shift -= 4) {
      auto nibble = (c >> shift) & 0xF;
      if (nibble != 0 || !out.empty() || shift < 16) out += kDigits[nibble];
    }
    return out;
  }

  std::size_t position_;
  char32_t scalar_;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

class EmptyWord : public Error {
 public:
  EmptyWord() : Error("empty word") {}
};

class EmptyCorpus : public Error {
 public:
  EmptyCorpus() : Error("empty corpus") {}
};

// The index was built with a different encoder configuration than the query.
class ConfigMismatch : public Error {
 public:
  using Error::Error;
};

// Failure reading a lexicon, corpus, index dump or table file. line() is
// 1-based; 0 means the failure is not tied to a line (e.g. open failed).
class LoadError : public Error {
 public:
  LoadError(std::string source, std::size_t line, const std::string& what)
      : Error(line == 0 ? source + ": " + what
                        : source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

}  // namespace ametaphone
