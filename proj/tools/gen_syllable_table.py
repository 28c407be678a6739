#!/usr/bin/env python3
# Copyright 2026 The ametaphone Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Generates the Ethiopic syllable layout table and the UCD name dump.

Usage: gen_syllable_table.py <repo-root>

Writes include/ametaphone/syllable_table.hpp (family/order per codepoint)
and tests/data/ucd_ethiopic.txt (codepoint;name;decomposition), which the
test suite uses to check the table independently of this script.
"""

import os
import sys
import unicodedata

BLOCK_FIRST = 0x1200
SYLLABLE_LAST = 0x135A
UCD_LAST = 0x137F

# Palatalized forms live in their own row but belong to other families.
PALATAL = {0x1358: 0x1228, 0x1359: 0x1218, 0x135A: 0x1348}
PALATAL_ORDER = 14

# Column -> order for standalone labiovelar rows.
SERIES_ORDERS = {0: 9, 2: 10, 3: 11, 4: 12, 5: 13}


def name(cp):
    return unicodedata.name(chr(cp), "")


def is_series_row(base):
    # "WI" alone is the plain wa-family; series rows carry a consonant stem.
    for c in range(8):
        last = name(base + c).split(" ")[-1]
        if last.endswith("WI") and last != "WI":
            return True
    return False


def main(root):
    rows = []
    for cp in range(BLOCK_FIRST, SYLLABLE_LAST + 1):
        n = name(cp)
        if not n.startswith("ETHIOPIC SYLLABLE"):
            continue
        if cp in PALATAL:
            rows.append((cp, PALATAL[cp], PALATAL_ORDER, n))
            continue
        base = cp & ~7
        col = cp & 7
        if is_series_row(base):
            order = SERIES_ORDERS[col]
        else:
            order = col + 1
        rows.append((cp, base, order, n))

    out = os.path.join(root, "include", "ametaphone", "syllable_table.hpp")
    with open(out, "w", encoding="utf-8") as f:
        f.write(HEADER)
        f.write("// Generated by tools/gen_syllable_table.py from the Unicode "
                "%s character database.\n" % unicodedata.unidata_version)
        f.write("// Do not edit by hand.\n\n")
        f.write("#pragma once\n\n#include <array>\n\n")
        f.write("#include \"ametaphone/syllable.hpp\"\n\n")
        f.write("namespace ametaphone::detail {\n\n")
        f.write("inline constexpr std::array<SyllableRecord, %d> "
                "kSyllableTable{{\n" % len(rows))
        for cp, base, order, n in rows:
            f.write("    {0x%04X, 0x%04X, %2d},  // %s %s\n"
                    % (cp, base, order, chr(cp), n[len("ETHIOPIC SYLLABLE "):]))
        f.write("}};\n\n}  // namespace ametaphone::detail\n")

    ucd = os.path.join(root, "tests", "data", "ucd_ethiopic.txt")
    with open(ucd, "w", encoding="utf-8") as f:
        f.write("# Unicode %s names for U+1200..U+137F.\n"
                % unicodedata.unidata_version)
        f.write("# codepoint;name;decomposition\n")
        for cp in range(BLOCK_FIRST, UCD_LAST + 1):
            n = name(cp)
            if n:
                f.write("%04X;%s;%s\n"
                        % (cp, n, unicodedata.decomposition(chr(cp))))


HEADER = """// Copyright 2026 The ametaphone Authors
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

"""

if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else ".")
