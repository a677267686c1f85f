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


#include "ruledsym/surface.hpp"

#include "ruledsym/errors.hpp"
#include "ruledsym/parser.hpp"

namespace ruledsym {

namespace {

UniPoly lcm(const UniPoly& a, const UniPoly& b) { return exact_quotient(a * b, gcd(a, b)).monic(); }

// Positive rational c such that p / c has coprime integer coefficients.
Rational vector_content(const Poly3& q) {
  Integer den_lcm = 1;
  for (const auto& p : q)
    for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  for (const auto& p : q)
    for (const auto& c : p.coeffs()) {
      Integer v = c.get_num() * (den_lcm / c.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
  Rational r(g, den_lcm);
  r.canonicalize();
  return r;
}

}  // namespace

NormalizedDirection normalize_direction(const RationalFunction3& q_raw) {
  if (q_raw[0].is_zero() && q_raw[1].is_zero() && q_raw[2].is_zero())
    throw ZeroDirection("direction vector is identically zero");
  UniPoly den = UniPoly::constant(1);
  for (const auto& f : q_raw) den = lcm(den, f.den());
  Poly3 num;
  UniPoly g;
  for (int i = 0; i < 3; ++i) {
    num[i] = q_raw[i].num() * exact_quotient(den, q_raw[i].den());
    g = gcd(g, num[i]);
  }
  for (auto& p : num) p = exact_quotient(p, g);
  const Rational content = vector_content(num);
  for (auto& p : num) p = p.scaled(1 / content);
  return {num, RationalFunction(den.scaled(1 / content), g)};
}

int degree_n(const Poly3& q) { return std::max({q[0].degree(), q[1].degree(), q[2].degree(), 0}); }

bool is_cylindrical(const Poly3& q) {
  Poly3 d{q[0].derivative(), q[1].derivative(), q[2].derivative()};
  return (q[1] * d[2] - q[2] * d[1]).is_zero() && (q[2] * d[0] - q[0] * d[2]).is_zero() &&
         (q[0] * d[1] - q[1] * d[0]).is_zero();
}

RuledSurface::RuledSurface(RationalFunction3 p, const RationalFunction3& q_raw) : p_(std::move(p)) {
  q_ = normalize_direction(q_raw).q;
  n_ = degree_n(q_);
}

RuledSurface RuledSurface::from_strings(const std::array<std::string, 3>* p, const std::array<std::string, 3>& q) {
  RationalFunction3 pf, qf;
  for (int i = 0; i < 3; ++i) {
    if (p) pf[i] = parse_rational_function((*p)[i], "t");
    qf[i] = parse_rational_function(q[i], "t");
  }
  return RuledSurface(pf, qf);
}

bool RuledSurface::p_is_zero() const { return p_[0].is_zero() && p_[1].is_zero() && p_[2].is_zero(); }

std::array<std::string, 3> RuledSurface::p_strings() const {
  return {to_string(p_[0]), to_string(p_[1]), to_string(p_[2])};
}

std::array<std::string, 3> RuledSurface::q_strings() const {
  return {to_string(q_[0]), to_string(q_[1]), to_string(q_[2])};
}

bool operator==(const RuledSurface& a, const RuledSurface& b) { return a.p_ == b.p_ && a.q_ == b.q_; }

std::optional<Vec3<Rational>> detect_conical(const RuledSurface& surface) {
  if (surface.p_is_zero()) return Vec3<Rational>{0, 0, 0};
  const auto& p = surface.p();
  const auto& q = surface.q();
  UniPoly den = UniPoly::constant(1);
  for (const auto& f : p) den = lcm(den, f.den());
  Poly3 num;
  for (int i = 0; i < 3; ++i) num[i] = p[i].num() * exact_quotient(den, p[i].den());
  // (num - den v) x q = 0, i.e. den (v x q) = num x q, linear in v.
  const Poly3 rhs{num[1] * q[2] - num[2] * q[1], num[2] * q[0] - num[0] * q[2], num[0] * q[1] - num[1] * q[0]};
  const UniPoly zero;
  const std::array<Poly3, 3> lhs{Poly3{zero, den * q[2], -(den * q[1])}, Poly3{-(den * q[2]), zero, den * q[0]},
                                 Poly3{den * q[1], -(den * q[0]), zero}};
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> b;
  for (int j = 0; j < 3; ++j) {
    int deg = rhs[j].degree();
    for (const auto& c : lhs[j]) deg = std::max(deg, c.degree());
    for (int d = 0; d <= deg; ++d) {
      rows.push_back({lhs[j][0].coeff(d), lhs[j][1].coeff(d), lhs[j][2].coeff(d)});
      b.push_back(rhs[j].coeff(d));
    }
  }
  auto sol = solve_linear(rows, b, 3);
  if (!sol.consistent) return std::nullopt;
  return Vec3<Rational>{sol.particular[0], sol.particular[1], sol.particular[2]};
}

}  // namespace ruledsym
