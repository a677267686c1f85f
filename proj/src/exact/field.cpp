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


#include "ruledsym/field.hpp"

#include <algorithm>
#include <stdexcept>

#include "ruledsym/errors.hpp"
#include "ruledsym/factor.hpp"

namespace ruledsym {

FieldPtr make_field(const AlgebraicNumber& generator) {
  if (generator.is_rational()) throw std::invalid_argument("field generator must be irrational");
  return std::make_shared<const NumberField>(NumberField{generator.minimal_poly(), generator});
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->minpoly == b->minpoly && a->generator == b->generator;
}

namespace {

const FieldPtr& pick_field(const FieldElem& a, const FieldElem& b) {
  if (!a.field() || a.is_rational()) return b.field() ? b.field() : a.field();
  if (!b.field() || b.is_rational()) return a.field();
  if (!same_field(a.field(), b.field())) throw std::logic_error("arithmetic across different number fields");
  return a.field();
}

}  // namespace

FieldElem::FieldElem(const UniPoly& rep, FieldPtr field) : field_(std::move(field)) {
  if (field_) {
    rep_ = rep.degree() >= field_->minpoly.degree() ? ruledsym::rem(rep, field_->minpoly) : rep;
  } else {
    if (rep.degree() > 0) throw std::logic_error("non-constant element without a field");
    rep_ = rep;
  }
}

Rational FieldElem::rational() const {
  if (!is_rational()) throw std::domain_error("field element is irrational");
  return rep_.coeff(0);
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) { return FieldElem(a.rep_ + b.rep_, pick_field(a, b)); }
FieldElem operator-(const FieldElem& a, const FieldElem& b) { return FieldElem(a.rep_ - b.rep_, pick_field(a, b)); }
FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  if (a.is_rational() && b.is_rational()) return FieldElem(a.rational() * b.rational());
  return FieldElem(a.rep_ * b.rep_, pick_field(a, b));
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in a number field");
  if (is_rational()) return FieldElem(Rational(1 / rep_.coeff(0)));
  auto eg = extended_gcd(rep_, field_->minpoly);
  return FieldElem(eg.s, field_);
}

Interval FieldElem::enclosure(const Rational& width) const {
  if (is_rational()) return Interval(rep_.coeff(0));
  return eval_interval(rep_, field_->generator.enclosure(width));
}

int FieldElem::sign(const PrecisionPolicy& policy) const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(rep_.coeff(0));
  Rational w(1, 1024);
  for (;;) {
    Interval iv = enclosure(w);
    if (int s = iv.certain_sign()) return s;
    if (w < policy.budget) break;
    w /= 1u << 16;
  }
  if (!policy.exact_fallback) throw PrecisionBudgetExceeded("sign undecided within the precision budget");
  return to_algebraic().sign();
}

AlgebraicNumber FieldElem::to_algebraic() const {
  if (is_rational()) return AlgebraicNumber(rational());
  const UniPoly& m = field_->minpoly;
  const UniPoly& e = rep_;
  // Characteristic polynomial Res_x(m(x), y - e(x)).
  UniPoly charpoly = interpolated_resultant(
      m, [&e](const Rational& y0) { return UniPoly::constant(y0) - e; }, m.degree());
  return select_root(charpoly, [this](const Rational& w) { return enclosure(w); });
}

FieldElem FieldElem::mapped(const FieldElem& image) const {
  if (is_rational()) return *this;
  FieldElem acc;
  const auto& c = rep_.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * image + FieldElem(*it);
  return acc;
}

FieldPtr common_field(const std::vector<FieldElem>& xs) {
  FieldPtr f;
  for (const auto& x : xs) {
    if (x.is_rational()) continue;
    if (!f)
      f = x.field();
    else if (!same_field(f, x.field()))
      throw std::logic_error("elements from different number fields");
  }
  return f;
}

Poly<FieldElem> to_field_poly(const UniPoly& p) {
  std::vector<FieldElem> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return Poly<FieldElem>(std::move(c));
}

namespace {

// sum_i g_i(theta) * (z0 - c*theta)^i reduced modulo m, as a polynomial in theta.
UniPoly shifted_in_theta(const Poly<FieldElem>& g, const Rational& z0, long c, const UniPoly& m) {
  UniPoly lin(std::vector<Rational>{z0, Rational(-c)});
  UniPoly acc;
  const auto& gc = g.coeffs();
  for (auto it = gc.rbegin(); it != gc.rend(); ++it) acc = rem(acc * lin + it->rep(), m);
  return acc;
}

std::vector<FieldRoot> roots_over_rationals(const Poly<FieldElem>& g) {
  std::vector<Rational> c;
  for (const auto& x : g.coeffs()) c.push_back(x.rational());
  std::vector<FieldRoot> out;
  for (const auto& r : isolate_real_roots(UniPoly(c))) {
    if (r.is_rational())
      out.push_back({FieldElem(r.rational()), FieldElem()});
    else
      out.push_back({FieldElem::generator(make_field(r)), FieldElem()});
  }
  return out;
}

}  // namespace

namespace {

std::vector<FieldRoot> roots_via_norm(const Poly<FieldElem>& g, const FieldPtr& F);

bool all_rational(const Poly<FieldElem>& g) {
  for (const auto& c : g.coeffs())
    if (!c.is_rational()) return false;
  return true;
}

void sort_roots(std::vector<FieldRoot>& roots) {
  std::vector<std::pair<AlgebraicNumber, size_t>> keyed;
  for (size_t i = 0; i < roots.size(); ++i) keyed.emplace_back(roots[i].value.to_algebraic(), i);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<FieldRoot> out;
  for (const auto& [k, i] : keyed) out.push_back(roots[i]);
  roots = std::move(out);
}

}  // namespace

std::vector<FieldRoot> real_roots_over(const Poly<FieldElem>& g_in, const FieldPtr& base) {
  if (g_in.is_zero()) throw std::invalid_argument("real_roots_over: zero polynomial");
  FieldPtr coefficient_field = common_field(g_in.coeffs());
  if (base && coefficient_field && !same_field(base, coefficient_field))
    throw std::logic_error("real_roots_over: coefficients outside the base field");
  FieldPtr F = base ? base : coefficient_field;
  if (!F) return roots_over_rationals(g_in);
  Poly<FieldElem> g = g_in.monic();
  g = exact_quotient(g, gcd(g, g.derivative())).monic();
  FieldElem id = FieldElem::generator(F);
  if (g.degree() <= 0) return {};
  if (g.degree() == 1) return {{-g.coeff(0), id}};
  if (all_rational(g)) {
    // Split over Q first so rational roots stay in F.
    std::vector<Rational> c;
    for (const auto& x : g.coeffs()) c.push_back(x.rational());
    std::vector<FieldRoot> out;
    for (const auto& f : irreducible_factors(UniPoly(c))) {
      if (f.degree() == 1) {
        out.push_back({FieldElem(Rational(-f.coeff(0))), id});
        continue;
      }
      for (auto& r : roots_via_norm(to_field_poly(f), F)) out.push_back(std::move(r));
    }
    sort_roots(out);
    return out;
  }
  auto out = roots_via_norm(g, F);
  sort_roots(out);
  return out;
}

namespace {

std::vector<FieldRoot> roots_via_norm(const Poly<FieldElem>& g, const FieldPtr& F) {

  const UniPoly& m = F->minpoly;
  const int norm_degree = m.degree() * g.degree();
  for (long c : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 5L, -5L, 7L, 11L, 13L}) {
    // Norm N(z) = Res_theta(m(theta), g(z - c*theta)).
    UniPoly N = interpolated_resultant(
        m, [&](const Rational& z0) { return shifted_in_theta(g, z0, c, m); }, norm_degree);
    if (gcd(N, N.derivative()).degree() > 0) continue;
    std::vector<FieldRoot> out;
    for (const auto& zeta : isolate_real_roots(N)) {
      FieldPtr G = zeta.is_rational() ? nullptr : make_field(zeta);
      FieldElem z = zeta.is_rational() ? FieldElem(zeta.rational()) : FieldElem::generator(G);
      // gcd over G of m(theta) and g(z - c*theta) is theta - h(z).
      std::vector<FieldElem> gz;
      {
        Poly<FieldElem> lin(std::vector<FieldElem>{z, FieldElem(Rational(-c))});
        Poly<FieldElem> acc;
        for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it)
          acc = acc * lin + to_field_poly(it->rep());
        gz = acc.coeffs();
      }
      Poly<FieldElem> h = gcd(to_field_poly(m), Poly<FieldElem>(gz));
      if (h.degree() != 1) throw std::logic_error("primitive element: non-linear conjugate gcd");
      FieldElem theta = -h.coeff(0);
      if (theta.to_algebraic() != F->generator) continue;
      out.push_back({z - FieldElem(Rational(c)) * theta, theta});
    }
    return out;
  }
  throw std::logic_error("primitive element: no separating shift found");
}

}  // namespace

}  // namespace ruledsym
