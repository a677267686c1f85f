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


#include <random>

#include "doctest.h"
#include "ruledsym/algebraic.hpp"
#include "ruledsym/factor.hpp"

using namespace ruledsym;

namespace {

UniPoly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(v);
}

AlgebraicNumber sqrt_of(long n) { return sqrt(AlgebraicNumber(n)); }

}  // namespace

TEST_CASE("univariate resultants") {
  // res(t^2 - 2, t - 3) = 3^2 - 2 up to sign convention res(a, b) = prod b(roots of a).
  CHECK(resultant(P({-2, 0, 1}), P({-3, 1})) == Rational(7));
  CHECK(resultant(P({-1, 1}), P({-1, 1})) == Rational(0));
  CHECK(resultant(P({1, 0, 1}), P({5})) == Rational(25));
}

TEST_CASE("isolate_real_roots examples") {
  CHECK(isolate_real_roots(P({1, 0, 1})).empty());
  auto r = isolate_real_roots(P({-3, 0, 1}));
  REQUIRE(r.size() == 2);
  CHECK(r[0].sign() < 0);
  CHECK(r[1].sign() > 0);
  CHECK(r[0] == -r[1]);
  CHECK(r[1].minimal_poly() == P({-3, 0, 1}));
  auto e = isolate_real_roots(P({-1, 1}) * P({1, 1}) * P({0, 1}));
  REQUIRE(e.size() == 3);
  CHECK(e[0].is_rational());
  CHECK(e[0].rational() == -1);
  CHECK(e[1].rational() == 0);
  CHECK(e[2].rational() == 1);
}

TEST_CASE("refine contract") {
  auto r3 = isolate_real_roots(P({-3, 0, 1}))[1];
  Rational w(1, 100000000000000000000_mpz);
  auto fine = refine(r3, w);
  CHECK(fine.interval().width() <= w);
  CHECK(fine.interval().lo * fine.interval().lo < 3);
  CHECK(fine.interval().hi * fine.interval().hi > 3);
  AlgebraicNumber half(Rational(1, 2));
  CHECK(refine(half, Rational(1, 10)).interval().width() == 0);
  auto r2 = isolate_real_roots(P({-2, 0, 1}))[1];
  CHECK(refine(r2, Rational(1)).interval().lo > -2);
  CHECK(!refine(r2, Rational(1)).interval().contains(Rational(-1414, 1000)));
}

TEST_CASE("algebraic arithmetic identities") {
  AlgebraicNumber s2 = sqrt_of(2), s3 = sqrt_of(3), s6 = sqrt_of(6);
  CHECK(s2 * s3 == s6);
  CHECK(s2 * s2 == AlgebraicNumber(2));
  CHECK((s2 + s3) * (s3 - s2) == AlgebraicNumber(1));
  CHECK((s2 + s3).minimal_poly() == P({1, 0, -10, 0, 1}));
  CHECK(s3 / s3 == AlgebraicNumber(1));
  CHECK(AlgebraicNumber(1) / s3 == s3 / AlgebraicNumber(3));
  CHECK(sqrt(AlgebraicNumber(Rational(9, 4))).rational() == Rational(3, 2));
  CHECK(sqrt(s2 * s2 + AlgebraicNumber(2)) == AlgebraicNumber(2));
  CHECK(s2 < s3);
  CHECK(-s2 < AlgebraicNumber(0));
  CHECK(s3.to_decimal(10) == "1.7320508075");
  // cos(2*pi/3) = -1/2 gives sin = sqrt(3)/2.
  AlgebraicNumber c(Rational(-1, 2));
  CHECK(sqrt(AlgebraicNumber(1) - c * c) == s3 / AlgebraicNumber(2));
}

TEST_CASE("isolation count matches Sturm on random products") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 25; ++trial) {
    UniPoly p = UniPoly::constant(1);
    for (int i = 0; i < 3; ++i) {
      int a = d(rng);
      p *= P({a, 1});
    }
    p *= P({d(rng), d(rng), 1 + (trial % 3), d(rng) % 2});
    UniPoly sq = squarefree_part(p);
    auto roots = isolate_real_roots(p);
    CHECK(static_cast<int>(roots.size()) == sturm_root_count(sq));
    for (const auto& r : roots) {
      Interval iv = eval_interval(p, r.enclosure(Rational(1, 1 << 20)));
      CHECK(iv.contains_zero());
    }
    for (size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1] < roots[i]);
  }
}
