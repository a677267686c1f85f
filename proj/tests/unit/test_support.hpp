// Copyright 2026 The ruledsym Authors.
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

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "ruledsym/recovery.hpp"
#include "ruledsym/report.hpp"
#include "ruledsym/surface.hpp"

namespace test_support {

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline std::string data_path(const std::string& name) { return std::string(RULEDSYM_TEST_DATA_DIR) + "/" + name + ".json"; }

inline ruledsym::RuledSurface corpus_surface(const std::string& name) {
  return ruledsym::surface_from_json(read_file(data_path(name)));
}

/// Pipeline results are memoized per (surface, mode) for the test process.
inline const ruledsym::SymmetryReport& corpus_report(const std::string& name,
                                                     ruledsym::SolveMode mode = ruledsym::SolveMode::All) {
  static std::map<std::pair<std::string, int>, ruledsym::SymmetryReport> cache;
  auto key = std::make_pair(name, static_cast<int>(mode));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, ruledsym::full_pipeline(corpus_surface(name), mode, name)).first;
  return it->second;
}

/// Counts by kind name, identity excluded.
inline std::map<std::string, int> nontrivial_counts(const ruledsym::SymmetryReport& r) {
  std::map<std::string, int> out;
  for (const auto& [kind, n] : r.counts())
    if (kind != ruledsym::IsometryKind::Identity) out[ruledsym::kind_name(kind)] = n;
  return out;
}

inline ruledsym::FieldMat3 diag(int a, int b, int c) {
  ruledsym::FieldMat3 m;
  for (auto& row : m)
    for (auto& x : row) x = ruledsym::FieldElem(0);
  m[0][0] = a;
  m[1][1] = b;
  m[2][2] = c;
  return m;
}

inline ruledsym::FieldVec3 vec(const ruledsym::Rational& a, const ruledsym::Rational& b, const ruledsym::Rational& c) {
  return {ruledsym::FieldElem(a), ruledsym::FieldElem(b), ruledsym::FieldElem(c)};
}

}  // namespace test_support
