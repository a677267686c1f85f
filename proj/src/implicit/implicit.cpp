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


#include "ruledsym/implicit.hpp"

#include <array>

#include "ruledsym/errors.hpp"
#include "ruledsym/solver.hpp"

namespace ruledsym {

namespace {

using FieldPoly = MultiPoly<FieldElem>;

// Lift-system variable layout: x, y, z, then b1, b2, b3, lambda.
constexpr int kLiftArity = 7;
constexpr int kLambda = 6;

const std::array<Rational, 5> kPlaneValues = {Rational(1), Rational(2), Rational(-1), Rational(3), Rational(-2)};

FieldPoly field_const(int arity, const FieldElem& c) { return FieldPoly::constant(arity, c); }

// F evaluated at the given polynomial substitutes for x, y, z.
FieldPoly substitute_all(const TrivariatePoly& F, const std::array<FieldPoly, 3>& images, int arity) {
  std::array<std::vector<FieldPoly>, 3> powers;
  for (int i = 0; i < 3; ++i) {
    const int d = std::max(F.degree_in(i), 0);
    auto& pw = powers[static_cast<size_t>(i)];
    pw.push_back(field_const(arity, FieldElem(1)));
    for (int k = 1; k <= d; ++k) pw.push_back(pw.back() * images[static_cast<size_t>(i)]);
  }
  FieldPoly acc(arity);
  for (const auto& [e, c] : F.terms()) {
    FieldPoly term = field_const(arity, FieldElem(c));
    for (size_t i = 0; i < 3; ++i)
      if (e[i] > 0) term = term * powers[i][static_cast<size_t>(e[i])];
    acc += term;
  }
  return acc;
}

// Q x + b with x at indices 0..2; b either symbolic (indices 3..5) or given.
std::array<FieldPoly, 3> affine_images(const FieldMat3& Q, const std::optional<FieldVec3>& b, int arity) {
  std::array<FieldPoly, 3> out;
  for (size_t i = 0; i < 3; ++i) {
    FieldPoly row(arity);
    for (size_t j = 0; j < 3; ++j) row += FieldPoly::variable(arity, static_cast<int>(j)) * Q[i][j];
    row += b ? field_const(arity, (*b)[i]) : FieldPoly::variable(arity, static_cast<int>(3 + i));
    out[i] = row;
  }
  return out;
}

FieldPoly to_field(const TrivariatePoly& F, int arity) {
  return F.remap(arity, {0, 1, 2}).map_coefficients<FieldElem>([](const Rational& c) { return FieldElem(c); });
}

FieldPoly lift_defect(const TrivariatePoly& F, const FieldMat3& Q) {
  FieldPoly moved = substitute_all(F, affine_images(Q, std::nullopt, kLiftArity), kLiftArity);
  return moved - FieldPoly::variable(kLiftArity, kLambda) * to_field(F, kLiftArity);
}

FieldMat3 rational_matrix(const std::array<std::array<int, 3>, 3>& m) {
  FieldMat3 Q;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) Q[i][j] = FieldElem(m[i][j]);
  return Q;
}

FieldMat3 mapped_matrix(const FieldMat3& Q, const FieldElem& image) {
  FieldMat3 out = Q;
  for (auto& row : out)
    for (auto& x : row)
      if (!x.is_rational()) x = x.mapped(image);
  return out;
}

// Common monomial factor of all terms of F, if any variable divides F.
int dividing_variable(const TrivariatePoly& F) {
  for (int v = 0; v < 3; ++v) {
    bool divides = !F.is_zero();
    for (const auto& [e, c] : F.terms())
      if (e[static_cast<size_t>(v)] == 0) divides = false;
    if (divides) return v;
  }
  return -1;
}

// Restriction of F to a fixed line; a repeated factor of F survives on it.
bool squarefree_on_test_line(const TrivariatePoly& F) {
  const std::array<Rational, 3> base = {Rational(1, 3), Rational(-2, 7), Rational(5, 11)};
  const std::array<Rational, 3> dir = {Rational(1), Rational(3, 5), Rational(-7, 4)};
  Poly<Rational> acc;
  for (const auto& [e, c] : F.terms()) {
    UniPoly term = UniPoly::constant(c);
    for (size_t i = 0; i < 3; ++i)
      if (e[i] > 0) term = term * UniPoly(std::vector<Rational>{base[i], dir[i]}).pow(static_cast<unsigned>(e[i]));
    acc += term;
  }
  if (acc.degree() <= 0) return true;
  return gcd(acc, acc.derivative()).degree() == 0;
}

bool kind_is_lifted(IsometryKind kind) {
  return kind == IsometryKind::Identity || kind == IsometryKind::Reflection || kind == IsometryKind::Rotation ||
         kind == IsometryKind::Axial;
}

std::optional<SectionParametrization> section_with(const TrivariatePoly& FN, int variable, const Rational& value,
                                                   bool polynomial_only) {
  TrivariatePoly G = FN.substitute(variable, value);
  if (G.is_zero() || G.is_constant()) return std::nullopt;
  std::array<int, 2> rest{};
  for (int v = 0, k = 0; v < 3; ++v)
    if (v != variable) rest[static_cast<size_t>(k++)] = v;
  for (int pick = 1; pick >= 0; --pick) {
    const int solved = rest[static_cast<size_t>(pick)];
    const int param = rest[static_cast<size_t>(1 - pick)];
    if (G.degree_in(solved) != 1) continue;
    auto coeffs = G.coefficients_in(solved);
    UniPoly lead = coeffs[1].to_univariate(param);
    UniPoly tail = coeffs[0].to_univariate(param);
    if (polynomial_only && lead.degree() > 0) continue;
    RationalFunction3 curve;
    curve[static_cast<size_t>(variable)] = RationalFunction(UniPoly::constant(value));
    curve[static_cast<size_t>(param)] = RationalFunction(UniPoly::variable());
    curve[static_cast<size_t>(solved)] = RationalFunction(-tail, lead);
    if (is_cylindrical(normalize_direction(curve).q)) continue;
    return SectionParametrization{variable, value, solved, curve, RuledSurface({}, curve)};
  }
  return std::nullopt;
}

}  // namespace

TrivariatePoly highest_form(const TrivariatePoly& F) {
  if (F.is_zero()) throw ZeroInput("highest form of the zero polynomial");
  const int N = F.total_degree();
  TrivariatePoly out(F.arity());
  for (const auto& [e, c] : F.terms()) {
    int d = 0;
    for (int x : e) d += x;
    if (d == N) out.add_term(e, c);
  }
  return out;
}

std::optional<SectionParametrization> parametrize_section(const TrivariatePoly& FN, int variable,
                                                          const Rational& value) {
  return section_with(FN, variable, value, false);
}

std::optional<SectionParametrization> parametrize_highest_form(const TrivariatePoly& FN) {
  for (bool polynomial_only : {true, false})
    for (int v = 0; v < 3; ++v)
      for (const auto& c : kPlaneValues)
        if (auto s = section_with(FN, v, c, polynomial_only)) return s;
  return std::nullopt;
}

std::vector<Lift> lift_symmetry(const TrivariatePoly& F, const FieldMat3& Q) {
  if (!check_orthogonal(Q)) throw NotAnIsometry("lift_symmetry: Q is not orthogonal");
  FieldPoly defect = lift_defect(F, Q);
  // Coefficients in x, y, z become equations in (b1, b2, b3, lambda).
  std::map<Exponents, FieldPoly> grouped;
  for (const auto& [e, c] : defect.terms()) {
    Exponents key(e.begin(), e.begin() + 3);
    Exponents rest(e.begin() + 3, e.end());
    auto [it, inserted] = grouped.try_emplace(key, FieldPoly(4));
    it->second.add_term(rest, c);
  }
  std::vector<FieldPoly> equations;
  for (auto& [key, eq] : grouped)
    if (!eq.is_zero()) equations.push_back(eq);
  std::vector<Lift> out;
  if (equations.empty()) throw PositiveDimensional("lift_symmetry: every (b, lambda) is a solution");
  for (const auto& pt : solve_zero_dimensional(equations, {0, 1, 2, 3})) {
    Lift lift;
    lift.Q = pt.base_embedding.is_zero() ? Q : mapped_matrix(Q, pt.base_embedding);
    lift.b = {pt.values[0], pt.values[1], pt.values[2]};
    lift.lambda = pt.values[3];
    if (lift.lambda.is_zero()) continue;
    out.push_back(std::move(lift));
  }
  return out;
}

bool is_lift(const TrivariatePoly& F, const FieldMat3& Q, const FieldVec3& b, const FieldElem& lambda) {
  FieldPoly moved = substitute_all(F, affine_images(Q, b, 3), 3);
  return (moved - to_field(F, 3) * lambda).is_zero();
}

ImplicitReport implicit_pipeline(const TrivariatePoly& F) {
  ImplicitReport report;
  report.F = F;
  report.FN = highest_form(F);
  if (dividing_variable(F) >= 0)
    report.notes.push_back("sanity check: a coordinate variable divides F, so F is reducible");
  if (!squarefree_on_test_line(F))
    report.notes.push_back("sanity check: F restricted to a test line has a repeated factor");
  auto section = parametrize_highest_form(report.FN);
  if (!section)
    throw HeuristicFailure("no plane section of the highest form is linear in one variable");
  report.section = section;
  report.cone_report = full_pipeline(section->cone, SolveMode::All, "highest_form");

  bool skipped_rotoreflection = false;
  for (const auto& entry : report.cone_report.entries) {
    const IsometryKind kind = entry.isometry.classification.kind;
    if (!kind_is_lifted(kind)) {
      skipped_rotoreflection = skipped_rotoreflection || kind == IsometryKind::Rotoreflection;
      continue;
    }
    for (const auto& lift : lift_symmetry(F, entry.isometry.Q))
      report.entries.push_back({Isometry{lift.Q, lift.b, classify(lift.Q, lift.b)}, lift.lambda, false});
  }
  report.notes.push_back(
      "central symmetries are not derived from the highest form; a direct lift with Q = -I was attempted");
  const FieldMat3 minus_identity = rational_matrix({{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}});
  for (const auto& lift : lift_symmetry(F, minus_identity))
    report.entries.push_back({Isometry{lift.Q, lift.b, classify(lift.Q, lift.b)}, lift.lambda, true});
  if (skipped_rotoreflection) report.notes.push_back("rotoreflections of the highest form were not lifted");
  return report;
}

}  // namespace ruledsym
