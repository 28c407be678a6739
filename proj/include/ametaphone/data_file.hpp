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
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ametaphone/error.hpp"
#include "ametaphone/utf8.hpp"

// Line-oriented table format shared by the script tables, mistrike profiles
// and glyph-pair tables:
//
//   # comment (to end of line)
//   [section-name]
//   token token ...
//
// Tokens are separated by ASCII whitespace. Records before the first
// section header are an error.
namespace ametaphone::data_file {

struct Record {
  std::size_t line = 0;
  std::vector<std::string> tokens;
};

struct Section {
  std::string name;
  std::size_t line = 0;
  std::vector<Record> records;
};

struct Document {
  std::string source;
  std::vector<Section> sections;

  const Section* find(std::string_view name) const {
    for (const auto& s : sections) {
      if (s.name == name) return &s;
    }
    return nullptr;
  }
};

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\v\f";
  auto b = s.find_first_not_of(kSpace);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(kSpace);
  return s.substr(b, e - b + 1);
}

inline Document parse(std::string_view text, std::string source) {
  Document doc{std::move(source), {}};
  std::size_t line_no = 0;
  std::size_t pos = 0;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") pos = 3;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                            : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!utf8::decode(raw)) throw LoadError(doc.source, line_no, "malformed UTF-8");
    auto hash = raw.find('#');
    auto line = trim(raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw LoadError(doc.source, line_no, "malformed section header");
      }
      doc.sections.push_back(
          {std::string(trim(line.substr(1, line.size() - 2))), line_no, {}});
      continue;
    }
    if (doc.sections.empty()) {
      throw LoadError(doc.source, line_no, "record outside of any section");
    }
    Record rec{line_no, {}};
    std::istringstream in{std::string(line)};
    for (std::string tok; in >> tok;) rec.tokens.push_back(std::move(tok));
    doc.sections.back().records.push_back(std::move(rec));
  }
  return doc;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw LoadError(path, 0, "read failed");
  return buf.str();
}

inline Document load(const std::string& path) { return parse(read_file(path), path); }

}  // namespace ametaphone::data_file
