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

#include <optional>
#include <vector>

#include "ruledsym/algebraic.hpp"
#include "ruledsym/field.hpp"
#include "ruledsym/multipoly.hpp"

namespace ruledsym {

/// Certified value of a polynomial at an algebraic point.
struct CertifiedValue {
  Interval enclosure;  // contains the exact value
  int sign = 0;        // exact
};

/// Interval evaluation with refinement down to the policy budget. Zero is
/// only ever reported from exact arithmetic (rational evaluation, minimal
/// polynomial divisibility, or algebraic-number arithmetic as the fallback).
/// Throws PrecisionBudgetExceeded when the sign is still open at the budget
/// and the fallback is disabled.
CertifiedValue eval_interval(const MultiPoly<Rational>& p, const std::vector<AlgebraicNumber>& point,
                             const PrecisionPolicy& policy = {});

/// One real solution; every coordinate lies in the same field. When the
/// input coefficients live in a number field F, `base_embedding` is the
/// image of F's generator in that field.
struct SolutionPoint {
  std::vector<FieldElem> values;
  FieldElem base_embedding;
};

/// All real solutions of a zero-dimensional system of `arity` unknowns.
/// `order` lists the unknowns in elimination order; the last one is solved
/// univariately first during back-substitution. Unknowns not in `order`
/// are ignored (must not occur). Each returned point satisfies every
/// equation exactly. Throws PositiveDimensional when no finite triangular
/// decomposition is found.
std::vector<SolutionPoint> solve_zero_dimensional(const std::vector<MultiPoly<Rational>>& equations,
                                                  const std::vector<int>& order);
std::vector<SolutionPoint> solve_zero_dimensional(const std::vector<MultiPoly<FieldElem>>& equations,
                                                  const std::vector<int>& order);

/// Lift a rational polynomial into field coefficients.
MultiPoly<FieldElem> to_field_multipoly(const MultiPoly<Rational>& p);

/// Value of p at a point whose coordinates share one field.
FieldElem evaluate_at(const MultiPoly<FieldElem>& p, const std::vector<FieldElem>& point);
FieldElem evaluate_at(const MultiPoly<Rational>& p, const std::vector<FieldElem>& point);

}  // namespace ruledsym
