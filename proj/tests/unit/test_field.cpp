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


#include "doctest.h"
#include "ruledsym/errors.hpp"
#include "ruledsym/field.hpp"

using namespace ruledsym;

namespace {

UniPoly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(v);
}

AlgebraicNumber sqrt_of(long n) { return sqrt(AlgebraicNumber(n)); }

}  // namespace

TEST_CASE("number field arithmetic is exact") {
  FieldPtr F = make_field(sqrt_of(3));
  FieldElem r = FieldElem::generator(F);
  CHECK(r * r == FieldElem(3));
  CHECK((r + FieldElem(1)) * (r - FieldElem(1)) == FieldElem(2));
  FieldElem inv = (r + FieldElem(2)).inverse();
  CHECK(inv * (r + FieldElem(2)) == FieldElem(1));
  CHECK(inv.to_algebraic() == AlgebraicNumber(2) - sqrt_of(3));
  CHECK(r.sign() == 1);
  CHECK((r - FieldElem(2)).sign() == -1);
  CHECK((FieldElem(Rational(1, 2)) * r).to_algebraic() == sqrt_of(3) / AlgebraicNumber(2));
}

TEST_CASE("sign respects the precision policy") {
  FieldPtr F = make_field(sqrt_of(2));
  FieldElem r = FieldElem::generator(F);
  PrecisionPolicy strict = PrecisionPolicy::from_bits(4);
  strict.exact_fallback = false;
  // 1e-12 away from zero: undecidable with a 2^-4 budget.
  FieldElem tiny = r - FieldElem(parse_rational("1.414213562373"));
  CHECK_THROWS_AS(tiny.sign(strict), PrecisionBudgetExceeded);
  CHECK(tiny.sign() == 1);
  CHECK((r * r - FieldElem(2)).sign(strict) == 0);
}

TEST_CASE("real roots over a number field") {
  FieldPtr F = make_field(sqrt_of(2));
  FieldElem r = FieldElem::generator(F);
  // x^2 - 2 splits over Q(sqrt 2).
  Poly<FieldElem> two(std::vector<FieldElem>{r * FieldElem(0) - FieldElem(2), FieldElem(0), r * r - FieldElem(1)});
  auto roots = real_roots_over(two);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].value.to_algebraic() == -sqrt_of(2));
  CHECK(roots[1].value.to_algebraic() == sqrt_of(2));
  // x - sqrt 2 has a root in F itself.
  Poly<FieldElem> lin(std::vector<FieldElem>{-r, FieldElem(1)});
  auto one = real_roots_over(lin);
  REQUIRE(one.size() == 1);
  CHECK(one[0].value == r);
  // x^2 - sqrt 2 needs a degree-4 extension; the embedding maps sqrt 2 consistently.
  Poly<FieldElem> q(std::vector<FieldElem>{-r, FieldElem(0), FieldElem(1)});
  auto ext = real_roots_over(q);
  REQUIRE(ext.size() == 2);
  for (const auto& root : ext) {
    CHECK(root.value * root.value == root.embedding);
    CHECK(root.embedding.to_algebraic() == sqrt_of(2));
  }
  CHECK(ext[1].value.to_algebraic() == sqrt(sqrt_of(2)));
}
