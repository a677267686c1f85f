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
#include "ruledsym/parser.hpp"
#include "ruledsym/recovery.hpp"
#include "test_support.hpp"

using namespace ruledsym;
using test_support::corpus_report;
using test_support::corpus_surface;

namespace {

const char* const kCorpus[] = {"example38", "x5", "cone_rotation", "x6", "x7", "x8", "x9", "x2", "x3", "x4", "x10"};

std::vector<AlgebraicIsometry> algebraic(const SymmetryReport& r) {
  std::vector<AlgebraicIsometry> out;
  for (const auto& e : r.entries) out.push_back(to_algebraic(e.isometry));
  return out;
}

bool contains(const std::vector<AlgebraicIsometry>& set, const AlgebraicIsometry& f) {
  for (const auto& g : set)
    if (equal(f, g)) return true;
  return false;
}

// Cayley transform (I - A)(I + A)^-1 of the skew matrix with entries a, b, c.
Mat3<Rational> cayley(const Rational& a, const Rational& b, const Rational& c) {
  Mat3<Rational> A{{{0, -a, b}, {a, 0, -c}, {-b, c, 0}}};
  Mat3<Rational> I = identity3<Rational>();
  Mat3<Rational> plus, minus;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      plus[i][j] = I[i][j] + A[i][j];
      minus[i][j] = I[i][j] - A[i][j];
    }
  // Inverse of plus by the adjugate.
  const Rational det = determinant(plus);
  Mat3<Rational> inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (plus[r0][c0] * plus[r1][c1] - plus[r0][c1] * plus[r1][c0]) / det;
    }
  return minus * inv;
}

RuledSurface moved(const RuledSurface& s, const Mat3<Rational>& R, const Vec3<Rational>& t) {
  RationalFunction3 p, q;
  for (int i = 0; i < 3; ++i) {
    p[i] = RationalFunction::constant(t[i]);
    for (int j = 0; j < 3; ++j) {
      p[i] += s.p()[j] * RationalFunction::constant(R[i][j]);
      q[i] += RationalFunction(s.q()[j]) * RationalFunction::constant(R[i][j]);
    }
  }
  return RuledSurface(p, q);
}

}  // namespace

TEST_CASE("property: every reported isometry is exact") {
  for (const char* name : kCorpus) {
    CAPTURE(std::string(name));
    auto s = corpus_surface(name);
    const auto& r = corpus_report(name);
    for (const auto& e : r.entries) {
      CHECK(check_orthogonal(e.isometry.Q));
      CHECK(verify_symmetry(s, e.phi, e.isometry.Q, e.isometry.b));
      CHECK(e.phi.k * e.phi.k != FieldElem(0));
    }
  }
}

TEST_CASE("property: identity present and phi injective") {
  for (const char* name : kCorpus) {
    CAPTURE(std::string(name));
    const auto& r = corpus_report(name);
    int identities = 0;
    for (const auto& e : r.entries) identities += e.isometry.classification.kind == IsometryKind::Identity;
    CHECK(identities == 1);
    auto fs = algebraic(r);
    for (size_t i = 0; i < r.entries.size(); ++i)
      for (size_t j = i + 1; j < r.entries.size(); ++j) {
        CHECK_FALSE(same_parameters(r.entries[i].phi, r.entries[j].phi));
        CHECK_FALSE(equal(fs[i], fs[j]));
      }
  }
}

TEST_CASE("property: group closure") {
  for (const char* name : kCorpus) {
    CAPTURE(std::string(name));
    auto fs = algebraic(corpus_report(name));
    for (const auto& f : fs)
      for (const auto& g : fs) CHECK(contains(fs, compose(f, g)));
  }
}

TEST_CASE("property: involutions mode is the involutive subset") {
  for (const char* name : {"example38", "x5", "x7", "x9"}) {
    CAPTURE(std::string(name));
    auto all = algebraic(corpus_report(name, SolveMode::All));
    auto inv = algebraic(corpus_report(name, SolveMode::Involutions));
    std::vector<AlgebraicIsometry> expected;
    for (const auto& f : all)
      if (is_identity(compose(f, f))) expected.push_back(f);
    CHECK(inv.size() == expected.size());
    for (const auto& f : expected) CHECK(contains(inv, f));
  }
}

TEST_CASE("property: counts are invariant under rigid motions") {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> d(-3, 3);
  for (const char* name : {"x6", "x9", "x4"}) {
    auto s = corpus_surface(name);
    auto base = corpus_report(name).counts();
    for (int trial = 0; trial < 2; ++trial) {
      auto R = cayley(Rational(d(rng), 2), Rational(d(rng), 3), Rational(d(rng), 1));
      CHECK(determinant(R) == 1);
      auto r = full_pipeline(moved(s, R, {d(rng), d(rng), d(rng)}), SolveMode::All);
      CHECK(r.counts() == base);
      for (const auto& e : r.entries) CHECK(check_orthogonal(e.isometry.Q));
    }
  }
}

TEST_CASE("property: reports are deterministic") {
  auto s = corpus_surface("x7");
  auto a = report_to_json(full_pipeline(s, SolveMode::All, "x7"), s);
  auto b = report_to_json(full_pipeline(s, SolveMode::All, "x7"), s);
  CHECK(a == b);
}
