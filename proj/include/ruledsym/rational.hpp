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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ruledsym {

/// Arbitrary precision integer.
using Integer = mpz_class;

/// Exact rational in canonical form (coprime, positive denominator).
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_one(const Rational& x) { return x == 1; }

/// Parses "12", "-3/4" or "1.25" into an exact rational.
Rational parse_rational(std::string_view text);

/// "a/b" or "a" when the denominator is one.
std::string to_string(const Rational& x);

/// Decimal rendering with `digits` digits after the point, truncated toward
/// zero. Display only.
std::string to_decimal(const Rational& x, int digits);

Rational rational_pow(const Rational& x, unsigned e);

/// Smallest power of two >= |x| (returns 1 for |x| <= 1).
Rational pow2_bound(const Rational& x);

Integer floor_div(const Integer& a, const Integer& b);

}  // namespace ruledsym
