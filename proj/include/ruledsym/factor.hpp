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

#include <utility>
#include <vector>

#include "ruledsym/poly.hpp"

namespace ruledsym {

/// Yun's algorithm. Returns (factor, multiplicity) pairs with monic,
/// squarefree, pairwise coprime factors; constants are dropped.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

/// Distinct monic irreducible factors of p over Q, sorted by degree and then
/// coefficients. Zassenhaus: modular factorization, Hensel lifting and
/// recombination by trial division.
std::vector<UniPoly> irreducible_factors(const UniPoly& p);

/// Irreducible factors with multiplicities.
std::vector<std::pair<UniPoly, int>> factor(const UniPoly& p);

namespace detail {

/// Integer polynomial, ascending coefficients, trimmed.
using ZPoly = std::vector<Integer>;

ZPoly to_zpoly(const UniPoly& primitive);
UniPoly from_zpoly(const ZPoly& z);

/// Monic gcd of two integer polynomials over Q, modular algorithm.
ZPoly modular_gcd(const ZPoly& a, const ZPoly& b);

/// Factors of a primitive squarefree integer polynomial with positive
/// leading coefficient (each primitive, positive leading coefficient).
std::vector<ZPoly> zassenhaus(const ZPoly& f);

bool is_probable_prime(unsigned long n);

}  // namespace detail

}  // namespace ruledsym
