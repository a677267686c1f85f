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

#include <string>
#include <string_view>
#include <vector>

#include "ruledsym/multipoly.hpp"
#include "ruledsym/ratfunc.hpp"

namespace ruledsym {

// Grammar (whitespace is ignored):
//   expr    := term (("+" | "-") term)*
//   term    := unary (("*" | "/") unary)*
//   unary   := ("+" | "-") unary | power
//   power   := primary ("^" integer)?
//   primary := number | variable | "(" expr ")"
//   number  := digits ("." digits)?
//   variable:= one of t s x y z
// Multiplication is always explicit. Exponents are non-negative integer
// literals. Errors raise ParseError with the byte offset.

/// Polynomial in `variables` (variable i of the result is variables[i]).
/// Division is allowed only by nonzero constants.
MultiPoly<Rational> parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

/// Rational function in the single variable `var`; division by any nonzero
/// polynomial is allowed.
RationalFunction parse_rational_function(std::string_view text, const std::string& var = "t");

/// Parse a univariate polynomial in `var`.
UniPoly parse_univariate(std::string_view text, const std::string& var = "t");

}  // namespace ruledsym
