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

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ruledsym/errors.hpp"
#include "ruledsym/poly.hpp"

namespace ruledsym {

using Exponents = std::vector<int>;

/// Sparse polynomial in a fixed number of variables over a field K. Terms
/// are keyed by exponent vectors of length arity(); no zero coefficient is
/// stored. The greatest key in lexicographic order is the leading term.
template <class K>
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, K>;

  explicit MultiPoly(int arity = 0) : arity_(arity) {}

  static MultiPoly constant(int arity, const K& c) {
    MultiPoly p(arity);
    p.add_term(Exponents(static_cast<size_t>(arity), 0), c);
    return p;
  }
  static MultiPoly variable(int arity, int index) {
    Exponents e(static_cast<size_t>(arity), 0);
    e.at(static_cast<size_t>(index)) = 1;
    MultiPoly p(arity);
    p.add_term(e, K(1));
    return p;
  }
  static MultiPoly monomial(const Exponents& e, const K& c) {
    MultiPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
  }

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
  }
  K constant_term() const {
    auto it = terms_.find(Exponents(static_cast<size_t>(arity_), 0));
    return it == terms_.end() ? K(0) : it->second;
  }

  void add_term(const Exponents& e, const K& c) {
    if (poly_detail::coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (poly_detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  int degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(var)]);
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
  }
  bool uses(int var) const { return degree_in(var) > 0; }

  /// Coefficients as a polynomial in `var`; entries do not involve `var`.
  std::vector<MultiPoly> coefficients_in(int var) const {
    std::vector<MultiPoly> out(static_cast<size_t>(std::max(degree_in(var), 0)) + (is_zero() ? 0 : 1),
                               MultiPoly(arity_));
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      int k = f[static_cast<size_t>(var)];
      f[static_cast<size_t>(var)] = 0;
      out[static_cast<size_t>(k)].add_term(f, c);
    }
    return out;
  }

  /// Inverse of coefficients_in.
  static MultiPoly from_coefficients_in(int arity, int var, const std::vector<MultiPoly>& coeffs) {
    MultiPoly p(arity);
    for (size_t k = 0; k < coeffs.size(); ++k)
      for (const auto& [e, c] : coeffs[k].terms_) {
        Exponents f = e;
        f[static_cast<size_t>(var)] += static_cast<int>(k);
        p.add_term(f, c);
      }
    return p;
  }

  /// Leading coefficient with respect to `var`.
  MultiPoly leading_in(int var) const {
    auto cs = coefficients_in(var);
    return cs.empty() ? MultiPoly(arity_) : cs.back();
  }

  /// Substitute var := value (the variable stays in the arity, unused).
  MultiPoly substitute(int var, const K& value) const {
    MultiPoly p(arity_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      int k = f[static_cast<size_t>(var)];
      f[static_cast<size_t>(var)] = 0;
      K v = c;
      for (int i = 0; i < k; ++i) v = v * value;
      p.add_term(f, v);
    }
    return p;
  }

  /// Substitute var := q.
  MultiPoly substitute(int var, const MultiPoly& q) const {
    auto cs = coefficients_in(var);
    MultiPoly acc(arity_);
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * q + *it;
    return acc;
  }

  /// Univariate polynomial in `var`; every other variable must be absent.
  Poly<K> to_univariate(int var) const {
    std::vector<K> c(static_cast<size_t>(std::max(degree_in(var), 0)) + 1, K(0));
    for (const auto& [e, v] : terms_) {
      for (int i = 0; i < arity_; ++i)
        if (i != var && e[static_cast<size_t>(i)] != 0)
          throw std::logic_error("to_univariate: polynomial involves another variable");
      c[static_cast<size_t>(e[static_cast<size_t>(var)])] = v;
    }
    return Poly<K>(std::move(c));
  }

  static MultiPoly from_univariate(int arity, int var, const Poly<K>& p) {
    MultiPoly out(arity);
    Exponents e(static_cast<size_t>(arity), 0);
    for (int i = 0; i <= p.degree(); ++i) {
      e[static_cast<size_t>(var)] = i;
      out.add_term(e, p.coeff(i));
    }
    return out;
  }

  /// Evaluate in any ring V accepting `V * V`, `V + V` and `V(K)` casts
  /// through `lift`.
  template <class V, class Lift>
  V evaluate_with(const std::vector<V>& point, const V& zero, Lift lift) const {
    V acc = zero;
    for (const auto& [e, c] : terms_) {
      V term = lift(c);
      for (int i = 0; i < arity_; ++i)
        for (int k = 0; k < e[static_cast<size_t>(i)]; ++k) term = term * point[static_cast<size_t>(i)];
      acc = acc + term;
    }
    return acc;
  }

  K evaluate(const std::vector<K>& point) const {
    return evaluate_with(point, K(0), [](const K& c) { return c; });
  }

  template <class K2, class F>
  MultiPoly<K2> map_coefficients(F f) const {
    MultiPoly<K2> p(arity_);
    for (const auto& [e, c] : terms_) p.add_term(e, f(c));
    return p;
  }

  /// Re-index variables: variable i becomes variable new_index[i].
  MultiPoly remap(int new_arity, const std::vector<int>& new_index) const {
    MultiPoly p(new_arity);
    for (const auto& [e, c] : terms_) {
      Exponents f(static_cast<size_t>(new_arity), 0);
      for (int i = 0; i < arity_; ++i)
        if (e[static_cast<size_t>(i)] != 0) f.at(static_cast<size_t>(new_index[static_cast<size_t>(i)])) += e[static_cast<size_t>(i)];
      p.add_term(f, c);
    }
    return p;
  }

  MultiPoly operator-() const {
    MultiPoly p(arity_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
  }
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly p = a;
    p.arity_ = std::max(a.arity_, b.arity_);
    for (const auto& [e, c] : b.terms_) p.add_term(e, c);
    return p;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly p(std::max(a.arity_, b.arity_));
    Exponents e(static_cast<size_t>(p.arity_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        p.add_term(e, ca * cb);
      }
    return p;
  }
  friend MultiPoly operator*(const MultiPoly& a, const K& s) {
    MultiPoly p(a.arity_);
    if (poly_detail::coeff_is_zero(s)) return p;
    for (const auto& [e, c] : a.terms_) p.terms_.emplace(e, c * s);
    return p;
  }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return (a - b).is_zero(); }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(unsigned k) const {
    MultiPoly r = constant(arity_, K(1));
    MultiPoly base = *this;
    while (k) {
      if (k & 1u) r = r * base;
      k >>= 1u;
      if (k) base = base * base;
    }
    return r;
  }

  /// Monic in the lexicographic leading term.
  MultiPoly monic() const {
    if (terms_.empty()) return *this;
    return *this * (K(1) / terms_.rbegin()->second);
  }

 private:
  static int total(const Exponents& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
  }

  int arity_;
  TermMap terms_;
};

template <class K>
bool is_zero(const MultiPoly<K>& p) {
  return p.is_zero();
}

/// Exact quotient a / b; throws std::domain_error when b does not divide a.
template <class K>
MultiPoly<K> exact_divide(const MultiPoly<K>& a, const MultiPoly<K>& b) {
  if (b.is_zero()) throw std::domain_error("multivariate division by zero");
  const int n = std::max(a.arity(), b.arity());
  MultiPoly<K> q(n), r = a;
  const auto& [lb, cb] = *b.terms().rbegin();
  const K inv = K(1) / cb;
  while (!r.is_zero()) {
    const auto& [lr, cr] = *r.terms().rbegin();
    Exponents d(lr.size());
    for (size_t i = 0; i < lr.size(); ++i) {
      d[i] = lr[i] - lb[i];
      if (d[i] < 0) throw std::domain_error("inexact multivariate division");
    }
    MultiPoly<K> t = MultiPoly<K>::monomial(d, cr * inv);
    q += t;
    r -= t * b;
  }
  return q;
}

/// Determinant by fraction-free (Bareiss) elimination.
template <class K>
MultiPoly<K> bareiss_determinant(std::vector<std::vector<MultiPoly<K>>> m, int arity) {
  const size_t n = m.size();
  if (n == 0) return MultiPoly<K>::constant(arity, K(1));
  MultiPoly<K> prev = MultiPoly<K>::constant(arity, K(1));
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t i = k + 1;
      while (i < n && m[i][k].is_zero()) ++i;
      if (i == n) return MultiPoly<K>(arity);
      std::swap(m[i], m[k]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = MultiPoly<K>(arity);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Res_var(a, b) for polynomials of positive degree in var, computed from
/// the Sylvester matrix. A linear input is eliminated by direct
/// substitution; with a single remaining variable the resultant is
/// interpolated from univariate ones. Throws ZeroInput if either input is
/// zero.
template <class K>
MultiPoly<K> resultant(const MultiPoly<K>& a, const MultiPoly<K>& b, int var);

namespace multipoly_detail {

template <class K>
MultiPoly<K> linear_resultant(const MultiPoly<K>& lin, const MultiPoly<K>& b, int var) {
  // lin = u*x + w;  Res(lin, b) = sum_i b_i (-w)^i u^(d-i).
  auto lc = lin.coefficients_in(var);
  const MultiPoly<K>& w = lc[0];
  const MultiPoly<K>& u = lc[1];
  auto bc = b.coefficients_in(var);
  const int d = static_cast<int>(bc.size()) - 1;
  const int n = std::max(lin.arity(), b.arity());
  MultiPoly<K> acc(n);
  MultiPoly<K> neg_w = -w;
  // Horner in the homogeneous pair (-w, u).
  std::vector<MultiPoly<K>> upow(static_cast<size_t>(d) + 1, MultiPoly<K>::constant(n, K(1)));
  for (int i = 1; i <= d; ++i) upow[static_cast<size_t>(i)] = upow[static_cast<size_t>(i - 1)] * u;
  MultiPoly<K> wpow = MultiPoly<K>::constant(n, K(1));
  for (int i = 0; i <= d; ++i) {
    acc += bc[static_cast<size_t>(i)] * wpow * upow[static_cast<size_t>(d - i)];
    wpow = wpow * neg_w;
  }
  return acc;
}

template <class K>
std::vector<std::vector<MultiPoly<K>>> sylvester(const MultiPoly<K>& a, const MultiPoly<K>& b, int var) {
  auto ac = a.coefficients_in(var);
  auto bc = b.coefficients_in(var);
  const int m = static_cast<int>(ac.size()) - 1, n = static_cast<int>(bc.size()) - 1;
  const int size = m + n, arity = std::max(a.arity(), b.arity());
  std::vector<std::vector<MultiPoly<K>>> s(static_cast<size_t>(size),
                                           std::vector<MultiPoly<K>>(static_cast<size_t>(size), MultiPoly<K>(arity)));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) s[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = ac[static_cast<size_t>(m - j)];
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j)
      s[static_cast<size_t>(n + r)][static_cast<size_t>(r + j)] = bc[static_cast<size_t>(n - j)];
  return s;
}

}  // namespace multipoly_detail

/// Univariate resultant of specialisations, interpolated in `other`.
template <class K>
MultiPoly<K> interpolated_resultant_in(const MultiPoly<K>& a, const MultiPoly<K>& b, int var, int other) {
  const int arity = std::max(a.arity(), b.arity());
  const int da = a.degree_in(var), db = b.degree_in(var);
  const int bound = da * std::max(b.degree_in(other), 0) + db * std::max(a.degree_in(other), 0);
  const MultiPoly<K> la = a.leading_in(var), lb = b.leading_in(var);
  std::vector<K> xs, ys;
  for (long x = 0; static_cast<int>(xs.size()) <= bound; ++x) {
    K x0{Rational(x % 2 == 0 ? x / 2 : -(x + 1) / 2)};
    if (poly_detail::coeff_is_zero(la.substitute(other, x0).constant_term()) ||
        poly_detail::coeff_is_zero(lb.substitute(other, x0).constant_term()))
      continue;
    Poly<K> pa = a.substitute(other, x0).to_univariate(var);
    Poly<K> pb = b.substitute(other, x0).to_univariate(var);
    xs.push_back(x0);
    ys.push_back(resultant(pa, pb));
  }
  const size_t n = xs.size();
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
  Poly<K> r;
  for (size_t i = n; i-- > 0;) r = r * Poly<K>(std::vector<K>{-xs[i], K(1)}) + Poly<K>::constant(ys[i]);
  return MultiPoly<K>::from_univariate(arity, other, r);
}

template <class K>
MultiPoly<K> resultant(const MultiPoly<K>& a, const MultiPoly<K>& b, int var) {
  if (a.is_zero() || b.is_zero()) throw ZeroInput("resultant of a zero polynomial");
  const int arity = std::max(a.arity(), b.arity());
  const int da = a.degree_in(var), db = b.degree_in(var);
  if (da <= 0 && db <= 0) return MultiPoly<K>::constant(arity, K(1));
  if (da <= 0) return a.pow(static_cast<unsigned>(db));
  if (db <= 0) return b.pow(static_cast<unsigned>(da));
  if (da == 1) return multipoly_detail::linear_resultant(a, b, var);
  if (db == 1) {
    MultiPoly<K> r = multipoly_detail::linear_resultant(b, a, var);
    return (da % 2 == 1) ? -r : r;
  }
  std::vector<int> others;
  for (int i = 0; i < arity; ++i)
    if (i != var && (a.uses(i) || b.uses(i))) others.push_back(i);
  if (others.empty()) {
    return MultiPoly<K>::constant(arity, resultant(a.to_univariate(var), b.to_univariate(var)));
  }
  if (others.size() == 1) return interpolated_resultant_in(a, b, var, others[0]);
  return bareiss_determinant(multipoly_detail::sylvester(a, b, var), arity);
}

/// Text rendering with the given variable names, e.g. "3*x^2*y - z + 1/2".
std::string to_string(const MultiPoly<Rational>& p, const std::vector<std::string>& names);

}  // namespace ruledsym
