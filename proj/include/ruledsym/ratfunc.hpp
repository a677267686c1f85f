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

#include "ruledsym/poly.hpp"

namespace ruledsym {

/// Univariate rational function num/den over a field K with gcd(num, den)
/// = 1 and den monic. Zero is 0/1.
template <class K>
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly<K>::constant(K(1))) {}
  RatFunc(const Poly<K>& p) : num_(p), den_(Poly<K>::constant(K(1))) {}  // NOLINT
  RatFunc(const Poly<K>& num, const Poly<K>& den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    Poly<K> g = gcd(num, den);
    num_ = g.degree() > 0 ? exact_quotient(num, g) : num;
    den_ = g.degree() > 0 ? exact_quotient(den, g) : den;
    K lc = den_.lc();
    num_ = num_.scaled(K(1) / lc);
    den_ = den_.monic();
    if (num_.is_zero()) den_ = Poly<K>::constant(K(1));
  }
  static RatFunc constant(const K& c) { return RatFunc(Poly<K>::constant(c)); }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  K eval(const K& x) const {
    K d = den_.eval(x);
    if (poly_detail::coeff_is_zero(d)) throw std::domain_error("rational function evaluated at a pole");
    return num_.eval(x) / d;
  }

  /// f(g(t)).
  RatFunc compose(const RatFunc& g) const { return compose_poly(num_, g) / compose_poly(den_, g); }

  RatFunc operator-() const { return RatFunc(-num_, den_, Trusted{}); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("rational function division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc pow(unsigned e) const { return RatFunc(num_.pow(e), den_.pow(e), Trusted{}); }

 private:
  struct Trusted {};
  RatFunc(Poly<K> num, Poly<K> den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}

  static RatFunc compose_poly(const Poly<K>& p, const RatFunc& g) {
    // Homogenised Horner: p(n/d) = sum p_i n^i d^(deg-i) / d^deg.
    if (p.is_zero()) return RatFunc();
    const int deg = p.degree();
    Poly<K> acc;
    Poly<K> npow = Poly<K>::constant(K(1));
    std::vector<Poly<K>> dpow(static_cast<size_t>(deg) + 1, Poly<K>::constant(K(1)));
    for (int i = 1; i <= deg; ++i) dpow[static_cast<size_t>(i)] = dpow[static_cast<size_t>(i - 1)] * g.den_;
    for (int i = 0; i <= deg; ++i) {
      acc += npow * dpow[static_cast<size_t>(deg - i)] * Poly<K>::constant(p.coeff(i));
      npow = npow * g.num_;
    }
    return RatFunc(acc, dpow[static_cast<size_t>(deg)]);
  }

  Poly<K> num_, den_;
};

template <class K>
bool is_zero(const RatFunc<K>& f) {
  return f.is_zero();
}

using RationalFunction = RatFunc<Rational>;

/// "num" for polynomials, otherwise "(num)/(den)".
std::string to_string(const RationalFunction& f, const std::string& var = "t");

}  // namespace ruledsym
