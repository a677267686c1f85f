# Copyright 2026 The ruledsym Authors.
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

"""Converts corpus_symmetries.out.jsonl into the C++ table used by the tests.

Only isometries whose phi parameters are rational are frozen entry by
entry; kind counts are frozen for every surface.
"""

import json
import sys

HEADER = open(__file__).read().split('"""')[0].rstrip() + "\n\n"


def cxx(s):
    return '"' + s.replace("**", "^") + '"'


def main(src, dst):
    rows, counts = [], []
    for line in open(src):
        d = json.loads(line)
        name = d["surface"]
        for kind, n in sorted(d["counts"].items()):
            counts.append(f'    {{"{name}", "{kind}", {n}}},')
        for iso in d["isometries"]:
            if any("sqrt" in p for p in iso["phi"]):
                continue
            phi = ", ".join(cxx(p) for p in iso["phi"])
            Q = ", ".join(cxx(x) for x in iso["Q"])
            b = ", ".join(cxx(x) for x in iso["b"])
            rows.append(f'    {{"{name}", {{{phi}}}, "{iso["kind"]}", {{{Q}}}, {{{b}}}, {cxx(iso["c"])}}},')
    with open(dst, "w") as out:
        out.write(HEADER.replace("#", "//"))
        out.write("// Generated by tests/oracles/freeze_corpus.py from corpus_symmetries.out.jsonl.\n\n")
        out.write("#pragma once\n\n#include <array>\n\nnamespace frozen {\n\n")
        out.write("struct Isometry {\n  const char* surface;\n  std::array<const char*, 5> phi;  // alpha, beta, gamma, delta, k\n")
        out.write("  const char* kind;\n  std::array<const char*, 9> Q;  // row major\n  std::array<const char*, 3> b;\n  const char* c;\n};\n\n")
        out.write("struct KindCount {\n  const char* surface;\n  const char* kind;\n  int count;\n};\n\n")
        out.write("inline const Isometry kIsometries[] = {\n" + "\n".join(rows) + "\n};\n\n")
        out.write("inline const KindCount kCounts[] = {\n" + "\n".join(counts) + "\n};\n\n}  // namespace frozen\n")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
