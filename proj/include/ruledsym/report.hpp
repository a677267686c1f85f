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

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ruledsym/implicit.hpp"
#include "ruledsym/recovery.hpp"
#include "ruledsym/surface.hpp"

namespace ruledsym {

/// Surface document {"p": [3 strings], "q": [3 strings]}; "p" may be
/// omitted for cones through the origin. Throws ParseError.
RuledSurface surface_from_json(const std::string& text);
std::string surface_to_json(const RuledSurface& surface);

/// Deterministic JSON (sorted keys, two-space indent, trailing newline).
std::string report_to_json(const SymmetryReport& report, const RuledSurface& surface);
std::string implicit_report_to_json(const ImplicitReport& report);

/// Field element as {"rat": "a/b"} or {"minpoly", "interval", "approx"}.
std::string number_to_json(const FieldElem& x);

struct MeshRow {
  Rational t, s;
  std::array<Rational, 3> point;
};

/// Grid of t_samples x s_samples points over the closed ranges; t values
/// at poles of p are dropped. Throws InvalidArgument when a sample count is
/// below 2 or a range is empty.
std::vector<MeshRow> sample_mesh(const RuledSurface& surface, std::pair<Rational, Rational> t_range,
                                 std::pair<Rational, Rational> s_range, int t_samples, int s_samples);

/// "t,s,x,y,z" header then one row per point, 12 decimal places.
std::string mesh_to_csv(const std::vector<MeshRow>& rows);

}  // namespace ruledsym
