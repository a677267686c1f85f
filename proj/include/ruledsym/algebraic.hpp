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

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ruledsym/poly.hpp"

namespace ruledsym {

/// Zero-test budget for interval evaluation: refine until the enclosure
/// width drops below `budget`, then fall back to exact arithmetic when
/// `exact_fallback` is set.
struct PrecisionPolicy {
  Rational budget = default_budget();
  bool exact_fallback = default_exact_fallback();

  /// Innermost PrecisionScope of this thread, else 10^-60.
  static Rational default_budget();
  /// Innermost PrecisionScope of this thread, else true.
  static bool default_exact_fallback();
  /// 2^-bits.
  static PrecisionPolicy from_bits(unsigned bits);
};

/// Overrides the default policy on the current thread for its lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(const PrecisionPolicy& policy);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  Rational saved_budget_;
  bool saved_fallback_;
  bool saved_active_;
};

/// Closed rational interval [lo, hi], lo <= hi.
struct Interval {
  Rational lo, hi;

  Interval() = default;
  explicit Interval(const Rational& x) : lo(x), hi(x) {}
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  /// +1 or -1 when the interval excludes zero, 0 otherwise.
  int certain_sign() const { return sgn(lo) > 0 ? 1 : (sgn(hi) < 0 ? -1 : 0); }

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator+(const Interval& a, const Rational& c) { return {a.lo + c, a.hi + c}; }
  friend Interval operator*(const Interval& a, const Rational& c) {
    return sgn(c) >= 0 ? Interval{a.lo * c, a.hi * c} : Interval{a.hi * c, a.lo * c};
  }
};

/// Reciprocal; the interval must exclude zero.
Interval inverse(const Interval& x);

/// Horner enclosure of p over x.
Interval eval_interval(const UniPoly& p, const Interval& x);

/// Real algebraic number: a monic irreducible polynomial over Q and a
/// rational interval containing exactly one of its real roots. Rational
/// values carry the linear polynomial and a degenerate interval. Values are
/// immutable; refinement returns a new value.
class AlgebraicNumber {
 public:
  AlgebraicNumber();
  AlgebraicNumber(const Rational& value);  // NOLINT(google-explicit-constructor)
  AlgebraicNumber(int value) : AlgebraicNumber(Rational(value)) {}  // NOLINT

  /// `irreducible` must be irreducible over Q with exactly one real root in
  /// the open interval (lo, hi). For degree one the root itself is used.
  static AlgebraicNumber from_isolated_root(const UniPoly& irreducible, const Rational& lo, const Rational& hi);

  const UniPoly& minimal_poly() const { return data_->minpoly; }
  int degree() const { return data_->minpoly.degree(); }
  bool is_rational() const { return degree() == 1; }
  /// The exact value; throws std::domain_error unless is_rational().
  const Rational& rational() const;
  Interval interval() const { return {lo_, hi_}; }

  /// Same root with interval width at most `width`.
  AlgebraicNumber refined(const Rational& width) const;
  /// Enclosure of width at most `width`.
  Interval enclosure(const Rational& width) const { return refined(width).interval(); }

  int sign() const;
  /// Decimal rendering truncated to `digits` places. Display only.
  std::string to_decimal(int digits) const;

  friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
  AlgebraicNumber operator-() const;
  AlgebraicNumber& operator+=(const AlgebraicNumber& o) { return *this = *this + o; }
  AlgebraicNumber& operator-=(const AlgebraicNumber& o) { return *this = *this - o; }
  AlgebraicNumber& operator*=(const AlgebraicNumber& o) { return *this = *this * o; }

  friend int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) == 0; }
  friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) != 0; }
  friend bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) < 0; }

 private:
  struct Data {
    UniPoly minpoly;
    std::vector<Integer> integer_poly;  // primitive integer multiple of minpoly
  };
  AlgebraicNumber(std::shared_ptr<const Data> d, Rational lo, Rational hi)
      : data_(std::move(d)), lo_(std::move(lo)), hi_(std::move(hi)) {}
  int sign_at(const Rational& x) const;

  std::shared_ptr<const Data> data_;
  Rational lo_, hi_;
};

inline bool is_zero(const AlgebraicNumber& x) { return x.sign() == 0; }

AlgebraicNumber refine(const AlgebraicNumber& x, const Rational& width);

/// Non-negative square root; throws std::domain_error for negative input.
AlgebraicNumber sqrt(const AlgebraicNumber& x);

/// Distinct real roots of a nonzero polynomial in increasing order. Rational
/// roots are exact.
std::vector<AlgebraicNumber> isolate_real_roots(const UniPoly& p);

/// Number of distinct real roots, counted with a Sturm sequence.
int sturm_root_count(const UniPoly& p);

/// Among the real roots of `p`, the unique one lying in every enclosure
/// produced by `enclose(width)` as width shrinks. Throws if none matches.
AlgebraicNumber select_root(const UniPoly& p, const std::function<Interval(const Rational& width)>& enclose);

/// Res_y(a(y), b_x(y)) as a polynomial in x, by evaluation at x = 0..degree
/// and interpolation. `b_at(x0)` returns b specialised at x = x0; the
/// specialisation must keep its degree in y.
UniPoly interpolated_resultant(const UniPoly& a, const std::function<UniPoly(const Rational&)>& b_at, int degree);

}  // namespace ruledsym
