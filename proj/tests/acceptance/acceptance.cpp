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


// Acceptance checks. Prints one line per criterion; with a numeric argument
// only that criterion runs. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ruledsym/errors.hpp"
#include "ruledsym/implicit.hpp"
#include "ruledsym/parser.hpp"
#include "ruledsym/phi.hpp"
#include "ruledsym/recovery.hpp"
#include "ruledsym/report.hpp"
#include "ruledsym/solver.hpp"
#include "ruledsym/surface.hpp"

using namespace ruledsym;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kBudgetSeconds = 120.0;

struct Outcome {
  enum class Status { Pass, Fail, Info } status;
  std::string detail;
};

// Collects failed sub-checks of one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_.empty()) return {Outcome::Status::Pass, summary};
    std::string d;
    for (const auto& f : failures_) d += (d.empty() ? "" : "; ") + f;
    return {Outcome::Status::Fail, "failed: " + d + " (observed: " + summary + ")"};
  }

 private:
  std::vector<std::string> failures_;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

RuledSurface corpus_surface(const std::string& name) {
  return surface_from_json(read_file(std::string(RULEDSYM_TEST_DATA_DIR) + "/" + name + ".json"));
}

struct Timed {
  SymmetryReport report;
  double seconds;
};

Timed timed_pipeline(const std::string& name, SolveMode mode = SolveMode::All) {
  auto surface = corpus_surface(name);
  auto start = Clock::now();
  auto report = full_pipeline(surface, mode, name);
  return {std::move(report), std::chrono::duration<double>(Clock::now() - start).count()};
}

std::map<std::string, int> nontrivial_counts(const SymmetryReport& r) {
  std::map<std::string, int> out;
  for (const auto& [kind, n] : r.counts())
    if (kind != IsometryKind::Identity && n > 0) out[kind_name(kind)] = n;
  return out;
}

std::string describe(const std::map<std::string, int>& counts) {
  std::string out;
  for (const auto& [kind, n] : counts) out += (out.empty() ? "" : ", ") + std::to_string(n) + " " + kind;
  return out.empty() ? "none" : out;
}

FieldMat3 diag(int a, int b, int c) {
  FieldMat3 m;
  for (auto& row : m)
    for (auto& x : row) x = FieldElem(0);
  m[0][0] = a;
  m[1][1] = b;
  m[2][2] = c;
  return m;
}

FieldVec3 vec(const Rational& a, const Rational& b, const Rational& c) {
  return {FieldElem(a), FieldElem(b), FieldElem(c)};
}

std::string text(const FieldElem& x) { return x.is_rational() ? to_string(x.rational()) : "<algebraic>"; }

bool zero_vector(const FieldVec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

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

std::string seconds(double s) {
  std::ostringstream ss;
  ss.setf(std::ios::fixed);
  ss.precision(2);
  ss << s << " s";
  return ss.str();
}

Outcome golden_example() {
  Checker c;
  auto [r, t] = timed_pipeline("example38");
  auto counts = r.counts();
  c.expect(r.entries.size() == 8, "expected 8 isometries, got " + std::to_string(r.entries.size()));
  c.expect(counts[IsometryKind::Identity] == 1, "identity count");
  c.expect(counts[IsometryKind::Reflection] == 2, "reflection count");
  c.expect(counts[IsometryKind::Axial] == 3, "axial count");
  c.expect(counts[IsometryKind::Rotoreflection] == 2, "rotoreflection count");
  bool found = false;
  const auto want_c = parse_rational_function("-(t^8+1)/t");
  for (const auto& e : r.entries) {
    const auto& cl = e.isometry.classification;
    if (cl.kind != IsometryKind::Axial || !equal(e.isometry.Q, diag(-1, 1, -1))) continue;
    found = true;
    c.expect(equal(e.isometry.b, vec(4, 0, 10)), "b differs from (4, 0, 10)");
    c.expect(cl.locus.type == FixedLocus::Type::Line && equal(cl.locus.point, vec(2, 0, 5)) &&
                 equal(cl.locus.direction, vec(0, 1, 0)),
             "axis differs from {x = 2, z = 5}");
    bool c_ok = e.phi.c.has_value();
    if (c_ok) {
      const auto& num = e.phi.c->num();
      const auto& den = e.phi.c->den();
      std::vector<Rational> n, d;
      for (const auto& x : num.coeffs()) c_ok = c_ok && x.is_rational();
      for (const auto& x : den.coeffs()) c_ok = c_ok && x.is_rational();
      if (c_ok) {
        for (const auto& x : num.coeffs()) n.push_back(x.rational());
        for (const auto& x : den.coeffs()) d.push_back(x.rational());
        c_ok = RationalFunction(UniPoly(n), UniPoly(d)) == want_c;
      }
    }
    c.expect(c_ok, "c(t) differs from -(t^8+1)/t");
  }
  c.expect(found, "no axial symmetry with Q = diag(-1, 1, -1)");
  c.expect(t < kBudgetSeconds, "runtime " + seconds(t));
  return c.outcome("8 isometries (" + describe(nontrivial_counts(r)) +
                   "); axial Q = diag(-1,1,-1), b = (4,0,10), c = -(t^8+1)/t, axis {x=2, z=5}; " + seconds(t));
}

Outcome phi_solutions() {
  using Params = std::tuple<Rational, Rational, Rational, Rational, Rational>;
  auto param_set = [](const std::vector<PhiCandidate>& cs, bool& rational) {
    std::set<Params> out;
    for (const auto& c : cs) {
      const Mobius& m = c.mobius;
      if (!(m.alpha.is_rational() && m.beta.is_rational() && m.gamma.is_rational() && m.delta.is_rational() &&
            c.k.is_rational())) {
        rational = false;
        continue;
      }
      out.insert({m.alpha.rational(), m.beta.rational(), m.gamma.rational(), m.delta.rational(), c.k.rational()});
    }
    return out;
  };
  auto P = [](int a, int b, int g, int d, Rational k) { return Params{a, b, g, d, k}; };
  const Rational e(1, 8);
  const std::set<Params> gamma0 = {P(1, 0, 0, 1, 1), P(1, 0, 0, 1, -1), P(-1, 0, 0, 1, 1), P(-1, 0, 0, 1, -1)};
  const std::set<Params> gamma1 = {P(0, 1, 1, 0, 1),   P(0, 1, 1, 0, -1),   P(0, -1, 1, 0, 1),   P(0, -1, 1, 0, -1),
                                   P(1, 1, 1, -1, e),  P(1, 1, 1, -1, -e),  P(1, -1, 1, 1, e),   P(1, -1, 1, 1, -e),
                                   P(-1, 1, 1, 1, e),  P(-1, 1, 1, 1, -e),  P(-1, -1, 1, -1, e), P(-1, -1, 1, -1, -e)};
  Checker c;
  auto s = corpus_surface("example38");
  bool rational = true;
  auto got0 = param_set(solve_system(build_system(s, Branch::GammaZero, SystemMode::All)), rational);
  auto got1 = param_set(solve_system(build_system(s, Branch::GammaOne, SystemMode::All)), rational);
  c.expect(rational, "irrational solution present");
  c.expect(got0 == gamma0, "gamma = 0 branch: " + std::to_string(got0.size()) + " solutions, set differs");
  c.expect(got1 == gamma1, "gamma = 1 branch: " + std::to_string(got1.size()) + " solutions, set differs");
  return c.outcome("gamma = 0: identity + 3; gamma = 1: 12; exact set equality");
}

Outcome conical_corpus() {
  Checker c;
  auto [r, t] = timed_pipeline("x5");
  auto counts = r.counts();
  c.expect(r.entries.size() == 16, "expected 16 isometries, got " + std::to_string(r.entries.size()));
  const std::map<IsometryKind, int> want = {{IsometryKind::Identity, 1}, {IsometryKind::Reflection, 5},
                                            {IsometryKind::Axial, 5},    {IsometryKind::Central, 1},
                                            {IsometryKind::Rotation, 2}, {IsometryKind::Rotoreflection, 2}};
  for (const auto& [kind, n] : want)
    c.expect(counts[kind] == n, std::string(kind_name(kind)) + ": " + std::to_string(counts[kind]));
  for (const auto& e : r.entries) {
    c.expect(zero_vector(e.isometry.b), "nonzero b");
    c.expect(e.phi.c.has_value() && e.phi.c->is_zero(), "nonzero c(t)");
  }
  c.expect(t < kBudgetSeconds, "runtime " + seconds(t));
  return c.outcome("x5: 16 isometries (" + describe(nontrivial_counts(r)) + "), all b = 0 and c = 0; " + seconds(t));
}

Outcome table_rows() {
  Checker c;
  const std::vector<std::pair<std::string, std::map<std::string, int>>> rows = {
      {"x6", {{"axial", 1}}},
      {"x7", {{"central", 1}, {"reflection", 1}, {"axial", 1}}},
      {"x8", {{"central", 1}}},
      {"x9", {{"reflection", 1}}}};
  std::string summary;
  for (const auto& [name, want] : rows) {
    auto [r, t] = timed_pipeline(name);
    auto got = nontrivial_counts(r);
    c.expect(got == want, name + ": expected " + describe(want) + ", got " + describe(got));
    c.expect(t < kBudgetSeconds, name + " runtime " + seconds(t));
    summary += (summary.empty() ? "" : "; ") + name + ": " + describe(got);
    if (name != "x7") continue;
    auto F = parse_polynomial("x^3 - 27*y*z^2", {"x", "y", "z"});
    for (const auto& e : r.entries) {
      const auto& f = e.isometry;
      bool lifted = is_lift(F, f.Q, f.b, FieldElem(1)) || is_lift(F, f.Q, f.b, FieldElem(-1));
      c.expect(lifted, std::string("x7 ") + kind_name(f.classification.kind) + " is not a symmetry of x^3 - 27yz^2");
    }
  }
  return c.outcome(summary + "; x7 isometries preserve x^3 - 27yz^2");
}

Outcome rotation_sqrt3() {
  Checker c;
  auto [r, t] = timed_pipeline("cone_rotation");
  const auto sqrt3_over_2 = parse_univariate("t^2 - 3/4");
  bool found = false;
  for (const auto& e : r.entries) {
    const auto& cl = e.isometry.classification;
    if (cl.kind != IsometryKind::Rotation || !cl.angle || !(cl.angle->cos == FieldElem(Rational(-1, 2)))) continue;
    if (!equal(cl.locus.direction, vec(0, 0, 1))) continue;
    bool entries_ok = true;
    for (const auto& row : e.isometry.Q)
      for (const auto& x : row)
        if (!x.is_rational()) entries_ok = entries_ok && x.to_algebraic().minimal_poly() == sqrt3_over_2;
    found = found || entries_ok;
  }
  c.expect(found, "no rotation about the z-axis with cos = -1/2 and entries in Q(sqrt 3)");
  return c.outcome("rotation about the z-axis, cos = -1/2, irrational entries +-sqrt(3)/2; " + seconds(t));
}

Outcome involution_mode() {
  Checker c;
  for (const char* name : {"example38", "x5"}) {
    auto all = algebraic(timed_pipeline(name).report);
    auto inv = algebraic(timed_pipeline(name, SolveMode::Involutions).report);
    std::vector<AlgebraicIsometry> expected;
    for (const auto& f : all)
      if (is_identity(compose(f, f))) expected.push_back(f);
    bool same = inv.size() == expected.size();
    for (const auto& f : expected) same = same && contains(inv, f);
    c.expect(same, std::string(name) + ": involutions mode differs from the involutive subset");
  }
  return c.outcome("example38 and x5: involutions mode equals {f : f o f = id}");
}

Outcome implicit_example() {
  Checker c;
  auto F = parse_polynomial("x^6 + y^5*z + 6*x^5 + 14*x^4 + 16*x^3 + 8*x^2 + z^2", {"x", "y", "z"});
  auto report = implicit_pipeline(F);
  bool axial = false, reflection = false;
  std::string plane;
  for (const auto& e : report.entries) {
    const auto& f = e.isometry;
    const auto& cl = f.classification;
    if (cl.kind == IsometryKind::Axial && zero_vector(f.b) && equal(cl.locus.direction, vec(1, 0, 0)) &&
        zero_vector(cl.locus.point))
      axial = axial || is_lift(F, f.Q, f.b, FieldElem(1));
    if (cl.kind == IsometryKind::Reflection && is_lift(F, f.Q, f.b, FieldElem(1))) {
      reflection = true;
      std::ostringstream ss;
      ss << "normal (" << text(cl.locus.direction[0]) << "," << text(cl.locus.direction[1]) << "," << text(cl.locus.direction[2])
         << "), offset " << text(cl.locus.offset);
      plane = ss.str();
    }
  }
  c.expect(axial, "no axial symmetry about the x-axis with b = 0");
  c.expect(reflection, "no reflection with F(Qx + b) = F(x)");
  return c.outcome("axial symmetry about the x-axis; reflection plane " + plane + "; F(Qx+b) = F(x) exactly");
}

Outcome property_suite() {
  Checker c;
  const char* const corpus[] = {"example38", "x5", "cone_rotation", "x6", "x7", "x8", "x9", "x2", "x3", "x4", "x10"};
  int isometries = 0;
  for (const char* name : corpus) {
    auto s = corpus_surface(name);
    auto r = full_pipeline(s, SolveMode::All, name);
    const std::string n(name);
    int identities = 0;
    for (const auto& e : r.entries) {
      ++isometries;
      c.expect(check_orthogonal(e.isometry.Q), n + ": Q not orthogonal");
      c.expect(verify_symmetry(s, e.phi, e.isometry.Q, e.isometry.b), n + ": nonzero residual");
      identities += e.isometry.classification.kind == IsometryKind::Identity;
    }
    c.expect(identities == 1, n + ": identity missing");
    auto fs = algebraic(r);
    for (size_t i = 0; i < fs.size(); ++i)
      for (size_t j = i + 1; j < fs.size(); ++j)
        c.expect(!same_parameters(r.entries[i].phi, r.entries[j].phi), n + ": repeated phi");
    for (const auto& f : fs)
      for (const auto& g : fs) c.expect(contains(fs, compose(f, g)), n + ": not closed under composition");
  }
  return c.outcome(std::to_string(std::size(corpus)) + " surfaces, " + std::to_string(isometries) +
                   " isometries: orthogonal, exact residual, closed, identity present, phi injective");
}

Outcome negative_controls() {
  Checker c;
  auto code_of = [](const std::string& name) {
    try {
      auto r = full_pipeline(corpus_surface(name), SolveMode::All, name);
      return std::string("finite answer with ") + std::to_string(r.entries.size()) + " isometries";
    } catch (const Error& e) {
      return std::string(error_code_name(e.code()));
    }
  };
  auto cyl = code_of("cylindrical");
  c.expect(cyl == "CYLINDRICAL_INPUT", "cylindrical input gave " + cyl);
  auto lin = code_of("linear_direction");
  c.expect(lin == "POSITIVE_DIMENSIONAL", "all-linear q gave " + lin);
  return c.outcome("cylindrical: " + cyl + "; all-linear q: " + lin);
}

Outcome timing_note() {
  std::string summary;
  for (const char* name : {"example38", "x5", "x6", "x7", "x8", "x9"}) {
    auto t = timed_pipeline(name).seconds;
    summary += (summary.empty() ? "" : ", ") + std::string(name) + " " + seconds(t);
  }
  return {Outcome::Status::Info, "timings are informational only: " + summary};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"golden worked example", golden_example},
      {"phi-system solution sets", phi_solutions},
      {"conical corpus", conical_corpus},
      {"corpus rows x6-x9", table_rows},
      {"2pi/3 rotation over Q(sqrt 3)", rotation_sqrt3},
      {"involutions mode", involution_mode},
      {"implicit pipeline", implicit_example},
      {"property suite", property_suite},
      {"negative controls", negative_controls},
      {"timings", timing_note},
  };
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  if (argc > 1 && (only < 1 || only > static_cast<int>(criteria.size()))) {
    std::cerr << "usage: " << argv[0] << " [criterion 1-" << criteria.size() << "]\n";
    return 64;
  }
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {Outcome::Status::Fail, std::string("exception: ") + e.what()};
    }
    const char* tag = out.status == Outcome::Status::Pass ? "PASS" : out.status == Outcome::Status::Fail ? "FAIL" : "INFO";
    failed += out.status == Outcome::Status::Fail;
    std::cout << "criterion " << i + 1 << " [" << tag << "] " << criteria[i].first << ": " << out.detail << std::endl;
  }
  return failed;
}
