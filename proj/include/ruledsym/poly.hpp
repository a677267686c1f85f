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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ruledsym/rational.hpp"

namespace ruledsym {

namespace poly_detail {
// Unqualified call so argument-dependent lookup finds is_zero overloads
// declared after this header.
template <class K>
bool coeff_is_zero(const K& x) {
  return is_zero(x);
}
}  // namespace poly_detail

/// Dense univariate polynomial with coefficients in a field K, stored in
/// ascending order. The zero polynomial has no coefficients; otherwise the
/// leading coefficient is nonzero.
///
/// K must provide the field operators, construction from int, and a free
/// `is_zero(const K&)`.
template <class K>
class Poly {
 public:
  Poly() = default;

  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const K& value) { return Poly(std::vector<K>{value}); }

  static Poly monomial(const K& value, int degree) {
    std::vector<K> c(static_cast<size_t>(degree) + 1, K(0));
    c.back() = value;
    return Poly(std::move(c));
  }

  /// The polynomial `x`.
  static Poly variable() { return monomial(K(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  const std::vector<K>& coeffs() const { return c_; }

  K coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
    return c_[static_cast<size_t>(i)];
  }

  const K& lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  K eval(const K& x) const {
    K acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Horner evaluation in any ring V that accepts `V * V + K`.
  template <class V>
  V eval_in(const V& x, const V& zero) const {
    V acc = zero;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<K> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * K(static_cast<int>(i));
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (c_.empty()) return *this;
    K inv = K(1) / c_.back();
    std::vector<K> d(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] * inv;
    return Poly(std::move(d));
  }

  Poly scaled(const K& s) const {
    if (poly_detail::coeff_is_zero(s)) return {};
    std::vector<K> d(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] * s;
    return Poly(std::move(d));
  }

  /// p(g(x)).
  Poly compose(const Poly& g) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(*it);
    return acc;
  }

  /// p(-x).
  Poly negated_variable() const {
    std::vector<K> d = c_;
    for (size_t i = 1; i < d.size(); i += 2) d[i] = -d[i];
    return Poly(std::move(d));
  }

  /// x^deg p(1/x).
  Poly reversed() const {
    std::vector<K> d(c_.rbegin(), c_.rend());
    return Poly(std::move(d));
  }

  /// Multiply by x^k.
  Poly shifted(int k) const {
    if (c_.empty() || k == 0) return *this;
    std::vector<K> d(static_cast<size_t>(k), K(0));
    d.insert(d.end(), c_.begin(), c_.end());
    return Poly(std::move(d));
  }

  Poly operator-() const {
    std::vector<K> d(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    const auto& big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const auto& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    std::vector<K> d = big;
    for (size_t i = 0; i < small.size(); ++i) d[i] = d[i] + small[i];
    return Poly(std::move(d));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<K> d(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (poly_detail::coeff_is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] = d[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(d));
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!poly_detail::coeff_is_zero(a.c_[i] - b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const {
    Poly result = constant(K(1));
    Poly base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

 private:
  void trim() {
    while (!c_.empty() && poly_detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
};

/// Quotient and remainder of a by b over the field K.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<K>{}, a};
  std::vector<K> r = a.coeffs();
  std::vector<K> q(static_cast<size_t>(a.degree() - b.degree() + 1), K(0));
  const K inv = K(1) / b.lc();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const K& ri = r[static_cast<size_t>(i)];
    if (is_zero(ri)) continue;
    K f = ri * inv;
    q[static_cast<size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) {
      auto idx = static_cast<size_t>(i - db + j);
      r[idx] = r[idx] - f * b.coeffs()[static_cast<size_t>(j)];
    }
  }
  r.resize(static_cast<size_t>(db));
  return {Poly<K>(std::move(q)), Poly<K>(std::move(r))};
}

template <class K>
Poly<K> rem(const Poly<K>& a, const Poly<K>& b) {
  return divmod(a, b).second;
}

/// Exact quotient; throws if b does not divide a.
template <class K>
Poly<K> exact_quotient(const Poly<K>& a, const Poly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

/// Monic gcd by the Euclidean algorithm; gcd(0,0) = 0.
template <class K>
Poly<K> euclid_gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = rem(a, b);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

template <class K>
Poly<K> gcd(const Poly<K>& a, const Poly<K>& b) {
  return euclid_gcd(a, b);
}

/// Monic gcd over Q, computed with a modular algorithm.
Poly<Rational> gcd(const Poly<Rational>& a, const Poly<Rational>& b);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g monic.
template <class K>
struct ExtendedGcd {
  Poly<K> g, s, t;
};

template <class K>
ExtendedGcd<K> extended_gcd(const Poly<K>& a, const Poly<K>& b) {
  Poly<K> r0 = a, r1 = b;
  Poly<K> s0 = Poly<K>::constant(K(1)), s1;
  Poly<K> t0, t1 = Poly<K>::constant(K(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly<K> s2 = s0 - q * s1;
    Poly<K> t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K inv = K(1) / r0.lc();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Sylvester resultant over the field K via the Euclidean remainder sequence.
/// Zero if either input is zero.
template <class K>
K resultant(Poly<K> a, Poly<K> b) {
  if (a.is_zero() || b.is_zero()) return K(0);
  K acc(1);
  for (;;) {
    const int m = a.degree(), n = b.degree();
    if (n == 0) {
      K lc = b.lc(), p(1);
      for (int i = 0; i < m; ++i) p = p * lc;
      return acc * p;
    }
    if (m == 0) {
      K lc = a.lc(), p(1);
      for (int i = 0; i < n; ++i) p = p * lc;
      return acc * p;
    }
    Poly<K> r = rem(a, b);
    if (r.is_zero()) return K(0);
    const int k = r.degree();
    if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
    K lc = b.lc();
    for (int i = 0; i < m - k; ++i) acc = acc * lc;
    a = std::move(b);
    b = std::move(r);
  }
}

// Rational-specific helpers.

using UniPoly = Poly<Rational>;

/// Integer content removed, positive leading coefficient, integer coefficients.
UniPoly primitive_part(const UniPoly& p);

/// Product of distinct irreducible factors (monic).
UniPoly squarefree_part(const UniPoly& p);

/// Parseable text, e.g. "3*t^2 - t + 1/2".
std::string to_string(const UniPoly& p, const std::string& var = "t");

/// Number of sign variations of the coefficient sequence.
int sign_variations(const std::vector<int>& signs);

/// Cauchy bound: every root has |root| < bound.
Rational root_bound(const UniPoly& p);

}  // namespace ruledsym
