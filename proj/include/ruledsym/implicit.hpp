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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ruledsym/multipoly.hpp"
#include "ruledsym/recovery.hpp"
#include "ruledsym/surface.hpp"

namespace ruledsym {

/// Trivariate polynomial in (x, y, z).
using TrivariatePoly = MultiPoly<Rational>;

/// Sum of the monomials of maximal total degree.
TrivariatePoly highest_form(const TrivariatePoly& F);

/// Cone s * r(t) through the section of F_N = 0 with the plane {v = value}.
struct SectionParametrization {
  int variable = 0;  // 0, 1, 2 for x, y, z
  Rational value;
  int solved_variable = 0;
  RationalFunction3 curve;  // r(t) before normalization
  RuledSurface cone;
};

/// Section with one fixed plane: requires the section polynomial to be
/// linear in one of the remaining variables (the lower-index one is the
/// parameter t when both qualify). Empty otherwise.
std::optional<SectionParametrization> parametrize_section(const TrivariatePoly& FN, int variable, const Rational& value);

/// Tries v = x, y, z and values 1, 2, -1, 3, -2 in that order, first
/// accepting only sections solvable with a constant leading coefficient
/// (polynomial r(t)), then any linear solve. Sections whose cone is
/// cylindrical are skipped. Empty when every plane fails.
std::optional<SectionParametrization> parametrize_highest_form(const TrivariatePoly& FN);

/// F(Q x + b) = lambda F(x); Q and b live in the same field.
struct Lift {
  FieldMat3 Q;
  FieldVec3 b;
  FieldElem lambda;
};

/// All real (b, lambda) with F(Q x + b) = lambda F(x) identically.
/// Throws PositiveDimensional when the solution set is infinite.
std::vector<Lift> lift_symmetry(const TrivariatePoly& F, const FieldMat3& Q);

struct ImplicitEntry {
  Isometry isometry;
  FieldElem lambda;
  bool supplementary = false;  // found by the direct Q = -I lift
};

struct ImplicitReport {
  TrivariatePoly F;
  TrivariatePoly FN;
  std::optional<SectionParametrization> section;  // set on success
  SymmetryReport cone_report;
  std::vector<ImplicitEntry> entries;
  std::vector<std::string> notes;
};

/// Symmetries of the cone F_N = 0 lifted to F. Rotations, axial symmetries
/// and reflections come from the cone; the central symmetry is attempted
/// separately. Throws HeuristicFailure when no section parametrizes F_N.
ImplicitReport implicit_pipeline(const TrivariatePoly& F);

/// Exact check of F(Q x + b) - lambda F(x) = 0.
bool is_lift(const TrivariatePoly& F, const FieldMat3& Q, const FieldVec3& b, const FieldElem& lambda);

}  // namespace ruledsym
