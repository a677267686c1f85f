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

#include <memory>
#include <vector>

#include "ruledsym/algebraic.hpp"
#include "ruledsym/poly.hpp"

namespace ruledsym {

/// Q(theta) for a real algebraic theta of degree at least two.
struct NumberField {
  UniPoly minpoly;            // monic, irreducible over Q
  AlgebraicNumber generator;  // the real embedding of theta
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Field generated by an irrational real algebraic number.
FieldPtr make_field(const AlgebraicNumber& generator);

/// True when both pointers denote the same embedded field (null means Q).
bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Element of Q or of a real number field, as a polynomial in the generator
/// reduced modulo its minimal polynomial. A null field means the element is
/// rational. Equality and zero tests are exact.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(int value) : rep_(value == 0 ? UniPoly{} : UniPoly::constant(Rational(value))) {}  // NOLINT
  FieldElem(const Rational& value) : rep_(sgn(value) == 0 ? UniPoly{} : UniPoly::constant(value)) {}  // NOLINT
  FieldElem(const UniPoly& rep, FieldPtr field);

  static FieldElem generator(const FieldPtr& field) { return FieldElem(UniPoly::variable(), field); }

  const UniPoly& rep() const { return rep_; }
  const FieldPtr& field() const { return field_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.degree() <= 0; }
  /// Throws std::domain_error unless is_rational().
  Rational rational() const;

  FieldElem inverse() const;
  FieldElem operator-() const { return FieldElem(-rep_, field_); }
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  friend bool operator==(const FieldElem& a, const FieldElem& b) { return (a - b).is_zero(); }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  /// Enclosure of the real value with width shrinking as `width` does.
  Interval enclosure(const Rational& width) const;
  /// Sign of the real value. Zero is exact; nonzero signs come from interval
  /// refinement down to the policy budget, then from the exact minimal
  /// polynomial. Throws PrecisionBudgetExceeded if the budget runs out and
  /// the fallback is disabled.
  int sign(const PrecisionPolicy& policy = {}) const;
  AlgebraicNumber to_algebraic() const;

  /// Image under the field embedding that sends the generator to `image`.
  FieldElem mapped(const FieldElem& image) const;

 private:
  UniPoly rep_;
  FieldPtr field_;
};

inline bool is_zero(const FieldElem& x) { return x.is_zero(); }

/// Common field of a set of elements; null if all are rational.
FieldPtr common_field(const std::vector<FieldElem>& xs);

/// A real root of a polynomial over a number field F, living in a field G
/// that contains F. `embedding` is the image of F's generator in G (unset
/// when F is Q).
struct FieldRoot {
  FieldElem value;
  FieldElem embedding;
};

/// All real roots of g, increasing order. The coefficients must lie in
/// `base` (or Q); when `base` is null the field of the coefficients is used.
std::vector<FieldRoot> real_roots_over(const Poly<FieldElem>& g, const FieldPtr& base = nullptr);

/// Lift a rational-coefficient polynomial.
Poly<FieldElem> to_field_poly(const UniPoly& p);

}  // namespace ruledsym
