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


#include "ruledsym/phi.hpp"

#include <algorithm>

#include "ruledsym/errors.hpp"
#include "ruledsym/parser.hpp"
#include "ruledsym/solver.hpp"

namespace ruledsym {

namespace {

using MP = MultiPoly<Rational>;
constexpr int kT = 4;  // auxiliary variable t during construction
constexpr int kWork = 5;

MP var(int i) { return MP::variable(kWork, i); }
MP cst(const Rational& c) { return MP::constant(kWork, c); }

MP drop_t(const MP& p) { return p.remap(phi_var::arity, {0, 1, 2, 3, 3}); }

FieldElem lift_into(const FieldElem& x, const FieldPtr& point_field, const FieldRoot& root) {
  if (!point_field) return x;
  return x.mapped(root.embedding);
}

// Real order; elements of unrelated fields go through algebraic numbers.
int compare_values(const FieldElem& a, const FieldElem& b) {
  if (!a.is_rational() && !b.is_rational() && !same_field(a.field(), b.field()))
    return compare(a.to_algebraic(), b.to_algebraic());
  if (a == b) return 0;
  return (a - b).sign() < 0 ? -1 : 1;
}

}  // namespace

std::string PhiSystem::dump() const {
  std::string out = "# branch gamma=";
  out += branch == Branch::GammaZero ? "0 (delta=1)" : "1";
  out += ", mode ";
  out += mode == SystemMode::All ? "all" : mode == SystemMode::InvolutionCaseI ? "involutions-I" : "involutions-II";
  out += ", n=" + std::to_string(n) + ", K = k^2\n";
  for (const auto& e : equations) out += to_string(e, {"alpha", "beta", "delta", "K"}) + " = 0\n";
  return out;
}

PhiSystem build_system(const RuledSurface& surface, Branch branch, SystemMode mode) {
  const int n = surface.n();
  const Rational g = branch == Branch::GammaOne ? 1 : 0;
  PhiSystem sys;
  sys.branch = branch;
  sys.mode = mode;
  sys.n = n;

  if (mode == SystemMode::InvolutionCaseII && branch == Branch::GammaOne) {
    sys.equations.push_back(MP::constant(phi_var::arity, 1));
    return sys;
  }

  const MP t = var(kT);
  const MP num = var(phi_var::alpha) * t + var(phi_var::beta);
  const MP den = t * g + var(phi_var::delta);
  std::vector<MP> num_pow{cst(1)}, den_pow{cst(1)};
  for (int i = 1; i <= n; ++i) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  MP norm_psi(kWork), norm_q(kWork);
  for (const auto& qi : surface.q()) {
    MP comp(kWork);
    for (int j = 0; j <= qi.degree(); ++j)
      if (!is_zero(qi.coeff(j)))
        comp += num_pow[static_cast<size_t>(j)] * den_pow[static_cast<size_t>(n - j)] * qi.coeff(j);
    norm_psi += comp * comp;
    norm_q += MP::from_univariate(kWork, kT, qi * qi);
  }
  MP identity = norm_q - var(phi_var::K) * norm_psi;

  MP extra(phi_var::arity);
  bool has_extra = false;
  auto fix = [&](int v, const MP& value) {
    identity = identity.substitute(v, value);
    if (has_extra) extra = extra.substitute(v, value.remap(phi_var::arity, {0, 1, 2, 3, 3}));
  };
  if (branch == Branch::GammaZero) fix(phi_var::delta, cst(1));
  switch (mode) {
    case SystemMode::All:
      break;
    case SystemMode::InvolutionCaseI: {
      const MP d = branch == Branch::GammaZero ? cst(1) : var(phi_var::delta);
      fix(phi_var::alpha, -d);
      extra = drop_t(var(phi_var::K) * (var(phi_var::beta) * g + d * d).pow(static_cast<unsigned>(n)) - cst(1));
      has_extra = true;
      break;
    }
    case SystemMode::InvolutionCaseII:
      fix(phi_var::alpha, cst(1));
      fix(phi_var::beta, cst(0));
      fix(phi_var::K, cst(1));
      break;
  }
  for (const auto& c : identity.coefficients_in(kT)) {
    MP e = drop_t(c);
    if (!e.is_zero()) sys.equations.push_back(e);
  }
  if (has_extra && !extra.is_zero()) sys.equations.push_back(extra);

  std::vector<int> order;
  for (int v : {phi_var::K, phi_var::beta, phi_var::delta, phi_var::alpha}) {
    const bool fixed = (v == phi_var::delta && branch == Branch::GammaZero) ||
                 (v == phi_var::alpha && mode != SystemMode::All) ||
                 (mode == SystemMode::InvolutionCaseII);
    if (!fixed) order.push_back(v);
  }
  sys.unknowns = order;
  return sys;
}

bool Mobius::is_identity() const { return beta.is_zero() && gamma.is_zero() && alpha == delta; }

RatFunc<FieldElem> PhiCandidate::psi() const {
  using P = Poly<FieldElem>;
  return RatFunc<FieldElem>(P({mobius.beta, mobius.alpha}), P({mobius.delta, mobius.gamma}));
}

Poly<FieldElem> PhiCandidate::scale(int n) const {
  using P = Poly<FieldElem>;
  return P({mobius.delta, mobius.gamma}).pow(static_cast<unsigned>(n)).scaled(k);
}

std::vector<PhiCandidate> solve_system(const PhiSystem& system) {
  std::vector<SolutionPoint> points;
  if (system.unknowns.empty()) {
    for (const auto& e : system.equations)
      if (!e.is_zero()) return {};
    points.push_back({std::vector<FieldElem>(phi_var::arity, FieldElem(0)), FieldElem()});
  } else {
    points = solve_zero_dimensional(system.equations, system.unknowns);
  }
  auto is_unknown = [&](int v) {
    return std::find(system.unknowns.begin(), system.unknowns.end(), v) != system.unknowns.end();
  };
  const bool g0 = system.branch == Branch::GammaZero;
  std::vector<PhiCandidate> out;
  for (const auto& pt : points) {
    std::vector<FieldElem> v = pt.values;
    v.resize(phi_var::arity);
    if (!is_unknown(phi_var::delta)) v[phi_var::delta] = g0 ? FieldElem(1) : v[phi_var::delta];
    if (!is_unknown(phi_var::alpha)) {
      if (system.mode == SystemMode::InvolutionCaseI) v[phi_var::alpha] = -v[phi_var::delta];
      if (system.mode == SystemMode::InvolutionCaseII) v[phi_var::alpha] = FieldElem(1);
    }
    if (!is_unknown(phi_var::beta) && system.mode == SystemMode::InvolutionCaseII) v[phi_var::beta] = FieldElem(0);
    if (!is_unknown(phi_var::K) && system.mode == SystemMode::InvolutionCaseII) v[phi_var::K] = FieldElem(1);

    const FieldElem& K = v[phi_var::K];
    if (K.is_zero() || K.sign() < 0) continue;
    const FieldElem gamma = g0 ? FieldElem(0) : FieldElem(1);
    if ((v[phi_var::alpha] * v[phi_var::delta] - v[phi_var::beta] * gamma).is_zero()) continue;

    const FieldPtr field = common_field(v);
    Poly<FieldElem> sq({-K, FieldElem(0), FieldElem(1)});
    for (const auto& root : real_roots_over(sq, field)) {
      PhiCandidate c;
      c.mobius.branch = system.branch;
      c.mobius.alpha = lift_into(v[phi_var::alpha], field, root);
      c.mobius.beta = lift_into(v[phi_var::beta], field, root);
      c.mobius.delta = lift_into(v[phi_var::delta], field, root);
      c.mobius.gamma = gamma;
      c.k = root.value;
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<PhiCandidate> solve_candidates(const RuledSurface& surface, SolveMode mode) {
  std::vector<PhiCandidate> out;
  auto add = [&](Branch b, SystemMode m) {
    auto part = solve_system(build_system(surface, b, m));
    out.insert(out.end(), part.begin(), part.end());
  };
  for (Branch b : {Branch::GammaZero, Branch::GammaOne}) {
    if (mode == SolveMode::All) {
      add(b, SystemMode::All);
    } else {
      add(b, SystemMode::InvolutionCaseI);
      if (b == Branch::GammaZero) add(b, SystemMode::InvolutionCaseII);
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool is_involution_form(const PhiCandidate& phi, int n) {
  const Mobius& m = phi.mobius;
  const FieldElem k2 = phi.k * phi.k;
  auto power = [](FieldElem x, int e) {
    FieldElem r(1);
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
  };
  if (m.alpha == -m.delta && k2 * power(m.gamma * m.beta + m.delta * m.delta, n) == FieldElem(1)) return true;
  return m.beta.is_zero() && m.gamma.is_zero() && m.alpha == m.delta && k2 * power(m.delta, 2 * n) == FieldElem(1);
}

std::vector<PhiCandidate> filter_involutions(const std::vector<PhiCandidate>& candidates, int n) {
  std::vector<PhiCandidate> out;
  for (const auto& c : candidates)
    if (is_involution_form(c, n)) out.push_back(c);
  return out;
}

bool same_parameters(const PhiCandidate& a, const PhiCandidate& b) {
  return a.mobius.branch == b.mobius.branch && compare_values(a.mobius.alpha, b.mobius.alpha) == 0 &&
         compare_values(a.mobius.beta, b.mobius.beta) == 0 && compare_values(a.mobius.delta, b.mobius.delta) == 0 &&
         compare_values(a.k, b.k) == 0;
}

bool canonical_less(const PhiCandidate& a, const PhiCandidate& b) {
  if (a.mobius.branch != b.mobius.branch) return a.mobius.branch < b.mobius.branch;
  const FieldElem* xa[] = {&a.mobius.alpha, &a.mobius.beta, &a.mobius.delta, &a.k};
  const FieldElem* xb[] = {&b.mobius.alpha, &b.mobius.beta, &b.mobius.delta, &b.k};
  for (int i = 0; i < 4; ++i) {
    const int c = compare_values(*xa[i], *xb[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace ruledsym
