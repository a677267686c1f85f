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


#include "ruledsym/recovery.hpp"

#include <algorithm>

#include "ruledsym/errors.hpp"

namespace ruledsym {

namespace {

using FPoly = Poly<FieldElem>;
using FRat = RatFunc<FieldElem>;

FRat to_field(const RationalFunction& f) { return FRat(to_field_poly(f.num()), to_field_poly(f.den())); }

// (gamma t + delta)^n q_i(psi(t)), a polynomial in t.
std::array<FPoly, 3> homogenized_direction(const RuledSurface& s, const PhiCandidate& phi) {
  const Mobius& m = phi.mobius;
  const FPoly num({m.beta, m.alpha});
  const FPoly den({m.delta, m.gamma});
  const int n = s.n();
  std::vector<FPoly> num_pow{FPoly::constant(1)}, den_pow{FPoly::constant(1)};
  for (int i = 1; i <= n; ++i) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  std::array<FPoly, 3> out;
  for (int i = 0; i < 3; ++i) {
    const UniPoly& qi = s.q()[static_cast<size_t>(i)];
    for (int j = 0; j <= qi.degree(); ++j)
      if (!is_zero(qi.coeff(j)))
        out[static_cast<size_t>(i)] +=
            (num_pow[static_cast<size_t>(j)] * den_pow[static_cast<size_t>(n - j)]).scaled(FieldElem(qi.coeff(j)));
  }
  return out;
}

std::array<FRat, 3> direction_at_psi(const RuledSurface& s, const PhiCandidate& phi) {
  auto hom = homogenized_direction(s, phi);
  const FPoly den = FPoly({phi.mobius.delta, phi.mobius.gamma}).pow(static_cast<unsigned>(s.n()));
  return {FRat(hom[0], den), FRat(hom[1], den), FRat(hom[2], den)};
}

// Q p(t) - p(psi(t)).
std::array<FRat, 3> directrix_defect(const RuledSurface& s, const PhiCandidate& phi, const FieldMat3& Q) {
  std::array<FRat, 3> p;
  for (int i = 0; i < 3; ++i) p[static_cast<size_t>(i)] = to_field(s.p()[static_cast<size_t>(i)]);
  const FRat psi = phi.psi();
  std::array<FRat, 3> out;
  for (int i = 0; i < 3; ++i) {
    FRat acc;
    for (int j = 0; j < 3; ++j) acc += FRat::constant(Q[i][j]) * p[static_cast<size_t>(j)];
    out[static_cast<size_t>(i)] = acc - p[static_cast<size_t>(i)].compose(psi);
  }
  return out;
}

FPoly lcm(const FPoly& a, const FPoly& b) { return exact_quotient(a * b, gcd(a, b)).monic(); }

// Rows of (lhs . x = rhs) for every t-coefficient.
void append_rows(const std::vector<FPoly>& lhs, const FPoly& rhs, std::vector<std::vector<FieldElem>>& rows,
                 std::vector<FieldElem>& b) {
  int deg = rhs.degree();
  for (const auto& c : lhs) deg = std::max(deg, c.degree());
  for (int d = 0; d <= deg; ++d) {
    std::vector<FieldElem> row;
    for (const auto& c : lhs) row.push_back(c.coeff(d));
    rows.push_back(std::move(row));
    b.push_back(rhs.coeff(d));
  }
}

bool is_zero_vec(const FieldVec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

FieldVec3 normalized_direction(FieldVec3 v) {
  for (int i = 0; i < 3; ++i)
    if (!v[static_cast<size_t>(i)].is_zero()) {
      const FieldElem inv = v[static_cast<size_t>(i)].inverse();
      for (auto& x : v) x = x * inv;
      break;
    }
  return v;
}

// Null space of M; basis vectors normalized.
std::vector<FieldVec3> kernel(const FieldMat3& m) {
  std::vector<std::vector<FieldElem>> rows;
  for (const auto& r : m) rows.push_back({r[0], r[1], r[2]});
  auto sol = solve_linear(rows, std::vector<FieldElem>(3, FieldElem(0)), 3);
  std::vector<FieldVec3> out;
  for (const auto& v : sol.nullspace) out.push_back(normalized_direction({v[0], v[1], v[2]}));
  return out;
}

FieldMat3 add_scaled_identity(const FieldMat3& q, int s) {
  FieldMat3 m = q;
  for (int i = 0; i < 3; ++i) m[i][i] = m[i][i] + FieldElem(s);
  return m;
}

// A solution of (I - Q) x = b, if any.
std::optional<FieldVec3> fixed_point(const FieldMat3& Q, const FieldVec3& b) {
  std::vector<std::vector<FieldElem>> rows;
  for (int i = 0; i < 3; ++i) {
    std::vector<FieldElem> r;
    for (int j = 0; j < 3; ++j) r.push_back(FieldElem(i == j ? 1 : 0) - Q[i][j]);
    rows.push_back(std::move(r));
  }
  auto sol = solve_linear(rows, {b[0], b[1], b[2]}, 3);
  if (!sol.consistent) return std::nullopt;
  return FieldVec3{sol.particular[0], sol.particular[1], sol.particular[2]};
}

Angle angle_of(const FieldMat3& Q, const FieldElem& cos, const FieldVec3& axis) {
  const FieldVec3 w{Q[2][1] - Q[1][2], Q[0][2] - Q[2][0], Q[1][0] - Q[0][1]};
  const int orientation = dot(w, axis).sign();
  const AlgebraicNumber one_minus = AlgebraicNumber(1) - (cos * cos).to_algebraic();
  AlgebraicNumber sin = one_minus.sign() == 0 ? AlgebraicNumber(0) : sqrt(one_minus);
  if (orientation < 0) sin = -sin;
  return {cos, sin};
}

}  // namespace

const char* kind_name(IsometryKind kind) {
  switch (kind) {
    case IsometryKind::Identity:
      return "identity";
    case IsometryKind::Reflection:
      return "reflection";
    case IsometryKind::Rotation:
      return "rotation";
    case IsometryKind::Axial:
      return "axial";
    case IsometryKind::Central:
      return "central";
    case IsometryKind::Rotoreflection:
      return "rotoreflection";
  }
  return "unknown";
}

std::vector<FieldMat3> solve_Q(const RuledSurface& surface, const PhiCandidate& phi) {
  const auto target = homogenized_direction(surface, phi);
  std::vector<FPoly> columns;
  for (const auto& qi : surface.q()) columns.push_back(to_field_poly(qi));
  FieldMat3 Q;
  std::vector<std::vector<FieldElem>> null_basis;
  for (int i = 0; i < 3; ++i) {
    std::vector<std::vector<FieldElem>> rows;
    std::vector<FieldElem> rhs;
    append_rows(columns, target[static_cast<size_t>(i)].scaled(phi.k), rows, rhs);
    auto sol = solve_linear(rows, rhs, 3);
    if (!sol.consistent) return {};
    for (int j = 0; j < 3; ++j) Q[i][j] = sol.particular[static_cast<size_t>(j)];
    null_basis = sol.nullspace;
  }
  if (null_basis.empty()) return {Q};
  if (null_basis.size() > 1) return {};
  // q(t) spans the plane orthogonal to w; an orthogonal Q fixes w up to sign.
  const FieldVec3 w{null_basis[0][0], null_basis[0][1], null_basis[0][2]};
  const FieldElem ww = dot(w, w);
  const FieldVec3 qw = Q * w;
  std::vector<FieldMat3> out;
  for (int sign : {1, -1}) {
    FieldMat3 cand = Q;
    for (int i = 0; i < 3; ++i) {
      const FieldElem mu = (FieldElem(sign) * w[static_cast<size_t>(i)] - qw[static_cast<size_t>(i)]) / ww;
      for (int j = 0; j < 3; ++j) cand[i][j] = cand[i][j] + mu * w[static_cast<size_t>(j)];
    }
    if (check_orthogonal(cand)) out.push_back(cand);
  }
  return out;
}

bool check_orthogonal(const FieldMat3& Q) { return equal(transpose(Q) * Q, identity3<FieldElem>()); }

std::optional<FieldVec3> solve_b(const RuledSurface& surface, const PhiCandidate& phi, const FieldMat3& Q) {
  const auto defect = directrix_defect(surface, phi, Q);
  const auto dir = homogenized_direction(surface, phi);
  FPoly den = FPoly::constant(1);
  for (const auto& d : defect) den = lcm(den, d.den());
  std::array<FPoly, 3> a;
  for (int i = 0; i < 3; ++i)
    a[static_cast<size_t>(i)] = defect[static_cast<size_t>(i)].num() * exact_quotient(den, defect[static_cast<size_t>(i)].den());
  // (a_i + den b_i) dir_j = (a_j + den b_j) dir_i for each pair.
  std::vector<std::vector<FieldElem>> rows;
  std::vector<FieldElem> rhs;
  const FPoly zero;
  for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}}) {
    std::vector<FPoly> lhs(3, zero);
    lhs[static_cast<size_t>(i)] = den * dir[static_cast<size_t>(j)];
    lhs[static_cast<size_t>(j)] = -(den * dir[static_cast<size_t>(i)]);
    append_rows(lhs, a[static_cast<size_t>(j)] * dir[static_cast<size_t>(i)] - a[static_cast<size_t>(i)] * dir[static_cast<size_t>(j)],
                rows, rhs);
  }
  auto sol = solve_linear(rows, rhs, 3);
  if (!sol.consistent) return std::nullopt;
  if (!sol.nullspace.empty()) throw TranslationInvariant("translation part is not unique: the direction field is constant");
  return FieldVec3{sol.particular[0], sol.particular[1], sol.particular[2]};
}

std::optional<FRat> recover_c(const RuledSurface& surface, const PhiCandidate& phi, const FieldMat3& Q,
                              const FieldVec3& b) {
  const auto defect = directrix_defect(surface, phi, Q);
  const auto dir = direction_at_psi(surface, phi);
  std::optional<FRat> c;
  for (int i = 0; i < 3 && !c; ++i)
    if (!dir[static_cast<size_t>(i)].is_zero())
      c = (defect[static_cast<size_t>(i)] + FRat::constant(b[static_cast<size_t>(i)])) / dir[static_cast<size_t>(i)];
  if (!c) return std::nullopt;
  for (int i = 0; i < 3; ++i)
    if (!(defect[static_cast<size_t>(i)] + FRat::constant(b[static_cast<size_t>(i)]) - *c * dir[static_cast<size_t>(i)]).is_zero())
      return std::nullopt;
  return c;
}

bool verify_symmetry(const RuledSurface& surface, const PhiCandidate& phi, const FieldMat3& Q, const FieldVec3& b) {
  if (!phi.c) return false;
  // x(phi(t,s)) = p(psi) + (a s + c) q(psi): compare the s^1 and s^0 parts.
  const auto dir = direction_at_psi(surface, phi);
  const FRat a(phi.scale(surface.n()));
  for (int i = 0; i < 3; ++i) {
    FRat lhs;
    for (int j = 0; j < 3; ++j) lhs += FRat::constant(Q[i][j]) * FRat(to_field_poly(surface.q()[static_cast<size_t>(j)]));
    if (!(lhs - a * dir[static_cast<size_t>(i)]).is_zero()) return false;
  }
  const auto defect = directrix_defect(surface, phi, Q);
  for (int i = 0; i < 3; ++i)
    if (!(defect[static_cast<size_t>(i)] + FRat::constant(b[static_cast<size_t>(i)]) - *phi.c * dir[static_cast<size_t>(i)]).is_zero())
      return false;
  return true;
}

Classification classify(const FieldMat3& Q, const FieldVec3& b) {
  if (!check_orthogonal(Q)) throw NotAnIsometry("matrix is not orthogonal");
  Classification out;
  const FieldElem det = determinant(Q);
  const FieldElem tr = trace(Q);
  auto require_fixed = [&]() {
    auto x = fixed_point(Q, b);
    if (!x) throw TranslationInvariant("isometry has no fixed point");
    return *x;
  };
  if (det == FieldElem(1)) {
    if (equal(Q, identity3<FieldElem>())) {
      if (!is_zero_vec(b)) throw TranslationInvariant("pure translation");
      out.kind = IsometryKind::Identity;
      out.locus.type = FixedLocus::Type::AllSpace;
      return out;
    }
    const FieldVec3 x = require_fixed();
    const FieldVec3 axis = kernel(add_scaled_identity(Q, -1)).at(0);
    const FieldElem cos = (tr - FieldElem(1)) / FieldElem(2);
    out.kind = cos == FieldElem(-1) ? IsometryKind::Axial : IsometryKind::Rotation;
    out.locus.type = FixedLocus::Type::Line;
    out.locus.direction = axis;
    const FieldElem shift = dot(x, axis) / dot(axis, axis);
    out.locus.point = {x[0] - shift * axis[0], x[1] - shift * axis[1], x[2] - shift * axis[2]};
    out.angle = angle_of(Q, cos, axis);
    return out;
  }
  const FieldVec3 x = require_fixed();
  if (equal(Q, add_scaled_identity(identity3<FieldElem>(), -2))) {
    out.kind = IsometryKind::Central;
    out.locus.type = FixedLocus::Type::Point;
    out.locus.point = x;
    return out;
  }
  const FieldVec3 normal = kernel(add_scaled_identity(Q, 1)).at(0);
  if (tr == FieldElem(1)) {
    out.kind = IsometryKind::Reflection;
    out.locus.type = FixedLocus::Type::Plane;
    out.locus.direction = normal;
    out.locus.offset = dot(normal, b) / FieldElem(2);
    return out;
  }
  out.kind = IsometryKind::Rotoreflection;
  out.locus.type = FixedLocus::Type::Point;
  out.locus.point = x;
  out.locus.direction = normal;
  out.angle = angle_of(Q, (tr + FieldElem(1)) / FieldElem(2), normal);
  return out;
}

std::optional<SymmetryEntry> recover_isometry(const RuledSurface& surface, const PhiCandidate& phi,
                                              const std::optional<Vec3<Rational>>& vertex) {
  for (const FieldMat3& Q : solve_Q(surface, phi)) {
    if (!check_orthogonal(Q)) continue;
    FieldVec3 b{FieldElem(0), FieldElem(0), FieldElem(0)};
    std::optional<FRat> c;
    if (vertex && surface.p_is_zero()) {
      c = FRat();
    } else {
      if (vertex) {
        const FieldVec3 v{FieldElem((*vertex)[0]), FieldElem((*vertex)[1]), FieldElem((*vertex)[2])};
        b = v - Q * v;
      } else {
        auto sb = solve_b(surface, phi, Q);
        if (!sb) continue;
        b = *sb;
      }
      c = recover_c(surface, phi, Q, b);
      if (!c) continue;
    }
    PhiCandidate accepted = phi;
    accepted.c = c;
    if (!verify_symmetry(surface, accepted, Q, b)) continue;
    return SymmetryEntry{accepted, Isometry{Q, b, classify(Q, b)}};
  }
  return std::nullopt;
}

std::map<IsometryKind, int> SymmetryReport::counts() const {
  std::map<IsometryKind, int> out;
  for (const auto& e : entries) ++out[e.isometry.classification.kind];
  return out;
}

SymmetryReport full_pipeline(const RuledSurface& surface, SolveMode mode, const std::string& surface_id) {
  if (is_cylindrical(surface.q())) throw CylindricalInput("direction q(t) is a constant vector up to scaling");
  SymmetryReport report;
  report.surface_id = surface_id;
  report.mode = mode == SolveMode::All ? "all" : "involutions";
  const auto vertex = detect_conical(surface);
  for (const auto& phi : solve_candidates(surface, mode)) {
    auto entry = recover_isometry(surface, phi, vertex);
    if (!entry) continue;
    if (mode == SolveMode::Involutions) {
      auto f = to_algebraic(entry->isometry);
      if (!is_identity(compose(f, f))) continue;
    }
    report.entries.push_back(std::move(*entry));
  }
  if (vertex) report.notes.push_back("conical surface");
  report.notes.push_back("input parametrization assumed proper");
  return report;
}

AlgebraicIsometry to_algebraic(const Isometry& f) {
  AlgebraicIsometry out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out.Q[i][j] = f.Q[i][j].to_algebraic();
    out.b[i] = f.b[i].to_algebraic();
  }
  return out;
}

AlgebraicIsometry compose(const AlgebraicIsometry& f, const AlgebraicIsometry& g) {
  return {f.Q * g.Q, f.Q * g.b + f.b};
}

bool equal(const AlgebraicIsometry& f, const AlgebraicIsometry& g) { return equal(f.Q, g.Q) && equal(f.b, g.b); }

bool is_identity(const AlgebraicIsometry& f) {
  AlgebraicIsometry id{identity3<AlgebraicNumber>(), {AlgebraicNumber(0), AlgebraicNumber(0), AlgebraicNumber(0)}};
  return equal(f, id);
}

}  // namespace ruledsym
