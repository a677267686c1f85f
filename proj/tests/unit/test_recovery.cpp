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


#include <set>

#include "doctest.h"
#include "frozen_corpus.hpp"
#include "ruledsym/errors.hpp"
#include "ruledsym/parser.hpp"
#include "ruledsym/recovery.hpp"
#include "test_support.hpp"

using namespace ruledsym;
using test_support::corpus_report;
using test_support::corpus_surface;
using test_support::diag;
using test_support::vec;

namespace {

// Oracle names differ from data file names for one surface.
std::string data_name(const std::string& oracle_name) {
  return oracle_name == "cone_sqrt3" ? "cone_rotation" : oracle_name;
}

bool rational_params(const PhiCandidate& c) {
  const Mobius& m = c.mobius;
  return m.alpha.is_rational() && m.beta.is_rational() && m.gamma.is_rational() && m.delta.is_rational() &&
         c.k.is_rational();
}

bool params_equal(const PhiCandidate& c, const std::array<const char*, 5>& p) {
  if (!rational_params(c)) return false;
  const Mobius& m = c.mobius;
  return m.alpha.rational() == parse_rational(p[0]) && m.beta.rational() == parse_rational(p[1]) &&
         m.gamma.rational() == parse_rational(p[2]) && m.delta.rational() == parse_rational(p[3]) &&
         c.k.rational() == parse_rational(p[4]);
}

UniPoly rational_poly(const Poly<FieldElem>& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coeffs()) c.push_back(x.rational());
  return UniPoly(std::move(c));
}

RationalFunction rational_c(const PhiCandidate& phi) {
  REQUIRE(phi.c.has_value());
  return RationalFunction(rational_poly(phi.c->num()), rational_poly(phi.c->den()));
}

const SymmetryEntry* find_kind(const SymmetryReport& r, IsometryKind kind, const FieldMat3& Q) {
  for (const auto& e : r.entries)
    if (e.isometry.classification.kind == kind && equal(e.isometry.Q, Q)) return &e;
  return nullptr;
}

}  // namespace

TEST_CASE("golden: worked example has 8 isometries") {
  const auto& r = corpus_report("example38");
  CHECK(r.entries.size() == 8);
  auto counts = r.counts();
  CHECK(counts[IsometryKind::Identity] == 1);
  CHECK(counts[IsometryKind::Reflection] == 2);
  CHECK(counts[IsometryKind::Axial] == 3);
  CHECK(counts[IsometryKind::Rotoreflection] == 2);
  CHECK(counts[IsometryKind::Rotation] == 0);
  CHECK(counts[IsometryKind::Central] == 0);
}

TEST_CASE("golden: axial symmetry about the line x = 2, z = 5") {
  const auto& r = corpus_report("example38");
  const SymmetryEntry* e = find_kind(r, IsometryKind::Axial, diag(-1, 1, -1));
  REQUIRE(e != nullptr);
  CHECK(equal(e->isometry.b, vec(4, 0, 10)));
  CHECK(rational_c(e->phi) == parse_rational_function("-(t^8+1)/t"));
  const FixedLocus& locus = e->isometry.classification.locus;
  CHECK(locus.type == FixedLocus::Type::Line);
  CHECK(equal(locus.point, vec(2, 0, 5)));
  CHECK(equal(locus.direction, vec(0, 1, 0)));
  REQUIRE(e->isometry.classification.angle.has_value());
  CHECK(e->isometry.classification.angle->cos == FieldElem(-1));
  CHECK(e->phi.mobius.alpha.is_zero());
  CHECK(e->phi.mobius.beta == FieldElem(1));
  CHECK(e->phi.k == FieldElem(-1));
}

TEST_CASE("golden: recovery steps for the axial symmetry") {
  auto s = corpus_surface("example38");
  PhiCandidate phi;
  phi.mobius = {0, 1, 1, 0, Branch::GammaOne};
  phi.k = -1;
  auto Qs = solve_Q(s, phi);
  REQUIRE(Qs.size() == 1);
  CHECK(equal(Qs[0], diag(-1, 1, -1)));
  CHECK(check_orthogonal(Qs[0]));
  auto b = solve_b(s, phi, Qs[0]);
  REQUIRE(b.has_value());
  CHECK(equal(*b, vec(4, 0, 10)));
  auto c = recover_c(s, phi, Qs[0], *b);
  REQUIRE(c.has_value());
  phi.c = c;
  CHECK(rational_c(phi) == parse_rational_function("-(t^8+1)/t"));
  CHECK(verify_symmetry(s, phi, Qs[0], *b));
  CHECK_FALSE(verify_symmetry(s, phi, Qs[0], vec(0, 0, 0)));
}

TEST_CASE("frozen oracle: per-isometry values") {
  int matched = 0;
  for (const auto& f : frozen::kIsometries) {
    const std::string where = std::string(f.surface) + " " + f.kind + " k=" + f.phi[4];
    CAPTURE(where);
    const auto& r = corpus_report(data_name(f.surface));
    const SymmetryEntry* hit = nullptr;
    for (const auto& e : r.entries)
      if (params_equal(e.phi, f.phi)) hit = &e;
    REQUIRE(hit != nullptr);
    CHECK(std::string(kind_name(hit->isometry.classification.kind)) == f.kind);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) CHECK(hit->isometry.Q[i][j] == FieldElem(parse_rational(f.Q[3 * i + j])));
      CHECK(hit->isometry.b[i] == FieldElem(parse_rational(f.b[i])));
    }
    CHECK(rational_c(hit->phi) == parse_rational_function(f.c));
    ++matched;
  }
  CHECK(matched >= 40);
}

TEST_CASE("frozen oracle: kind counts") {
  std::map<std::string, std::map<std::string, int>> want;
  for (const auto& k : frozen::kCounts) want[data_name(k.surface)][k.kind] = k.count;
  for (const auto& [surface, kinds] : want) {
    CAPTURE(surface);
    std::map<std::string, int> got;
    for (const auto& [kind, n] : corpus_report(surface).counts()) got[kind_name(kind)] = n;
    CHECK(got == kinds);
  }
}

TEST_CASE("rotation by 2pi/3 about the z-axis with entries in Q(sqrt 3)") {
  const auto& r = corpus_report("cone_rotation");
  int rotations = 0;
  for (const auto& e : r.entries) {
    const auto& c = e.isometry.classification;
    if (c.kind != IsometryKind::Rotation) continue;
    ++rotations;
    REQUIRE(c.angle.has_value());
    CHECK(c.angle->cos == FieldElem(Rational(-1, 2)));
    CHECK(c.angle->sin * c.angle->sin == AlgebraicNumber(Rational(3, 4)));
    CHECK(equal(c.locus.direction, vec(0, 0, 1)));
    const auto& Q = e.isometry.Q;
    CHECK(Q[0][0] == FieldElem(Rational(-1, 2)));
    CHECK(Q[2][2] == FieldElem(1));
    CHECK(Q[0][1].to_algebraic().minimal_poly() == parse_univariate("t^2 - 3/4"));
  }
  CHECK(rotations == 2);
}

TEST_CASE("conical surfaces have b = 0 and c = 0") {
  for (const char* name : {"x5", "x7", "cone_rotation"}) {
    for (const auto& e : corpus_report(name).entries) {
      CHECK(equal(e.isometry.b, vec(0, 0, 0)));
      REQUIRE(e.phi.c.has_value());
      CHECK(e.phi.c->is_zero());
    }
  }
}

TEST_CASE("classify") {
  SUBCASE("central symmetry at the origin") {
    auto c = classify(diag(-1, -1, -1), vec(0, 0, 0));
    CHECK(c.kind == IsometryKind::Central);
    CHECK(c.locus.type == FixedLocus::Type::Point);
    CHECK(equal(c.locus.point, vec(0, 0, 0)));
  }
  SUBCASE("reflection in the plane x = -1") {
    auto c = classify(diag(-1, 1, 1), vec(-2, 0, 0));
    CHECK(c.kind == IsometryKind::Reflection);
    CHECK(c.locus.type == FixedLocus::Type::Plane);
    CHECK(equal(c.locus.direction, vec(1, 0, 0)));
    CHECK(c.locus.offset == FieldElem(-1));
  }
  SUBCASE("identity") {
    auto c = classify(diag(1, 1, 1), vec(0, 0, 0));
    CHECK(c.kind == IsometryKind::Identity);
    CHECK(c.locus.type == FixedLocus::Type::AllSpace);
  }
  SUBCASE("quarter turn about the z-axis") {
    FieldMat3 Q = diag(0, 0, 1);
    Q[0][1] = -1;
    Q[1][0] = 1;
    auto c = classify(Q, vec(0, 0, 0));
    CHECK(c.kind == IsometryKind::Rotation);
    REQUIRE(c.angle.has_value());
    CHECK(c.angle->cos.is_zero());
    CHECK(c.angle->sin == AlgebraicNumber(1));
    CHECK(equal(c.locus.direction, vec(0, 0, 1)));
  }
  SUBCASE("rotoreflection") {
    FieldMat3 Q = diag(0, 0, -1);
    Q[0][1] = -1;
    Q[1][0] = 1;
    auto c = classify(Q, vec(0, 0, 0));
    CHECK(c.kind == IsometryKind::Rotoreflection);
    CHECK(c.locus.type == FixedLocus::Type::Point);
  }
  SUBCASE("translations and screws are rejected") {
    CHECK_THROWS_AS(classify(diag(1, 1, 1), vec(1, 0, 0)), TranslationInvariant);
    CHECK_THROWS_AS(classify(diag(-1, -1, 1), vec(0, 0, 1)), TranslationInvariant);
  }
  SUBCASE("non-orthogonal matrices are rejected") {
    CHECK_THROWS_AS(classify(diag(2, 1, 1), vec(0, 0, 0)), NotAnIsometry);
  }
}

TEST_CASE("pipeline preconditions") {
  CHECK_THROWS_AS(full_pipeline(corpus_surface("cylindrical"), SolveMode::All), CylindricalInput);
  CHECK_THROWS_AS(full_pipeline(corpus_surface("linear_direction"), SolveMode::All), PositiveDimensional);
}

TEST_CASE("reports carry notes") {
  const auto& cone = corpus_report("x5");
  CHECK(std::find(cone.notes.begin(), cone.notes.end(), "conical surface") != cone.notes.end());
  const auto& ex = corpus_report("example38");
  CHECK(std::find(ex.notes.begin(), ex.notes.end(), "conical surface") == ex.notes.end());
}
