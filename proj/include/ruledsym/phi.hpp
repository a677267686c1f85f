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
#include <string>
#include <vector>

#include "ruledsym/field.hpp"
#include "ruledsym/multipoly.hpp"
#include "ruledsym/ratfunc.hpp"
#include "ruledsym/surface.hpp"

namespace ruledsym {

/// Normalization of psi(t) = (alpha t + beta) / (gamma t + delta):
/// gamma = 0 forces delta = 1, otherwise gamma = 1.
enum class Branch { GammaZero, GammaOne };

/// Which parameter maps the system admits. The involution cases restrict
/// psi to alpha = -delta with k^2 (gamma beta + delta^2)^n = 1, or to the
/// identity Moebius map with k^2 = 1.
enum class SystemMode { All, InvolutionCaseI, InvolutionCaseII };

/// Variable indices of the system polynomials; K stands for k^2.
namespace phi_var {
constexpr int alpha = 0;
constexpr int beta = 1;
constexpr int delta = 2;
constexpr int K = 3;
constexpr int arity = 4;
}  // namespace phi_var

struct PhiSystem {
  std::vector<MultiPoly<Rational>> equations;
  std::vector<int> unknowns;  // elimination order, last solved first
  Branch branch = Branch::GammaZero;
  SystemMode mode = SystemMode::All;
  int n = 0;

  /// One equation per line, variables named alpha, beta, delta, K.
  std::string dump() const;
};

/// Coefficients in t of |q(t)|^2 - K (gamma t + delta)^(2n) |q(psi(t))|^2.
PhiSystem build_system(const RuledSurface& surface, Branch branch, SystemMode mode);

/// All entries share one field.
struct Mobius {
  FieldElem alpha, beta, gamma, delta;
  Branch branch = Branch::GammaZero;

  FieldElem determinant() const { return alpha * delta - beta * gamma; }
  bool is_identity() const;
};

/// phi(t,s) = (psi(t), k (gamma t + delta)^n s + c(t)); c is set once the
/// candidate has been accepted by recovery.
struct PhiCandidate {
  Mobius mobius;
  FieldElem k;
  std::optional<RatFunc<FieldElem>> c;

  /// psi as a rational function over the candidate's field.
  RatFunc<FieldElem> psi() const;
  /// a(t) = k (gamma t + delta)^n.
  Poly<FieldElem> scale(int n) const;
};

/// Real solutions with nonzero determinant and nonzero k, both signs of k,
/// sorted canonically. Throws PositiveDimensional.
std::vector<PhiCandidate> solve_system(const PhiSystem& system);

/// Candidates of both branches for the given mode (involution modes merge
/// cases I and II).
enum class SolveMode { All, Involutions };
std::vector<PhiCandidate> solve_candidates(const RuledSurface& surface, SolveMode mode);

/// Case I: alpha = -delta and k^2 (gamma beta + delta^2)^n = 1.
/// Case II: beta = gamma = 0, alpha = delta and k^2 delta^(2n) = 1.
bool is_involution_form(const PhiCandidate& phi, int n);
std::vector<PhiCandidate> filter_involutions(const std::vector<PhiCandidate>& candidates, int n);

/// Exact equality of (branch, alpha, beta, delta, k).
bool same_parameters(const PhiCandidate& a, const PhiCandidate& b);

/// Branch first, then alpha, beta, delta, k by real value.
bool canonical_less(const PhiCandidate& a, const PhiCandidate& b);

}  // namespace ruledsym
