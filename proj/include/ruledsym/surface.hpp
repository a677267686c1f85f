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

#include <array>
#include <optional>
#include <string>

#include "ruledsym/linalg.hpp"
#include "ruledsym/ratfunc.hpp"

namespace ruledsym {

using RationalFunction3 = std::array<RationalFunction, 3>;
using Poly3 = std::array<UniPoly, 3>;

/// Direction rescaled to coprime polynomials: q = mu * q_raw.
struct NormalizedDirection {
  Poly3 q;
  RationalFunction mu;
};

/// Clears denominators with their lcm, divides by the monic gcd of the
/// numerators and by the positive rational content. Throws ZeroDirection if
/// q_raw is identically zero.
NormalizedDirection normalize_direction(const RationalFunction3& q_raw);

/// Largest component degree.
int degree_n(const Poly3& q);

/// True iff q x q' vanishes identically.
bool is_cylindrical(const Poly3& q);

/// x(t,s) = p(t) + s q(t) with q normalized. Properness is assumed.
class RuledSurface {
 public:
  /// Normalizes q_raw; the ruling parameter absorbs the factor mu.
  RuledSurface(RationalFunction3 p, const RationalFunction3& q_raw);

  /// Parses component strings in the variable t; an empty p means p = 0.
  static RuledSurface from_strings(const std::array<std::string, 3>* p, const std::array<std::string, 3>& q);

  const RationalFunction3& p() const { return p_; }
  const Poly3& q() const { return q_; }
  int n() const { return n_; }
  bool p_is_zero() const;

  /// Component strings that parse back to the same surface.
  std::array<std::string, 3> p_strings() const;
  std::array<std::string, 3> q_strings() const;

  friend bool operator==(const RuledSurface& a, const RuledSurface& b);

 private:
  RationalFunction3 p_;
  Poly3 q_;
  int n_ = 0;
};

/// Vertex v with (p(t) - v) x q(t) identically zero, if one exists.
std::optional<Vec3<Rational>> detect_conical(const RuledSurface& surface);

}  // namespace ruledsym
