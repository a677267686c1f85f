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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ruledsym/algebraic.hpp"
#include "ruledsym/field.hpp"
#include "ruledsym/linalg.hpp"
#include "ruledsym/phi.hpp"
#include "ruledsym/surface.hpp"

namespace ruledsym {

using FieldMat3 = Mat3<FieldElem>;
using FieldVec3 = Vec3<FieldElem>;

enum class IsometryKind { Identity, Reflection, Rotation, Axial, Central, Rotoreflection };

/// Lower-case tag, e.g. "rotoreflection".
const char* kind_name(IsometryKind kind);

/// Points x with Q x + b = x.
struct FixedLocus {
  enum class Type { AllSpace, Plane, Line, Point, None };
  Type type = Type::None;
  FieldVec3 point;      // line point closest to the origin, or the fixed point
  FieldVec3 direction;  // line direction or plane normal, first nonzero entry 1
  FieldElem offset;     // plane: direction . x = offset
};

/// cos is exact in the field of Q; sin may need a quadratic extension.
struct Angle {
  FieldElem cos;
  AlgebraicNumber sin;
};

struct Classification {
  IsometryKind kind = IsometryKind::Identity;
  FixedLocus locus;
  std::optional<Angle> angle;
};

struct Isometry {
  FieldMat3 Q;
  FieldVec3 b;
  Classification classification;
};

/// Solutions of Q q(t) = k (gamma t + delta)^n q(psi(t)) by t-coefficient
/// matching. Empty when inconsistent. A rank-deficient coefficient matrix
/// yields the orthogonal completions of the particular solution.
std::vector<FieldMat3> solve_Q(const RuledSurface& surface, const PhiCandidate& phi);

/// Exact Q^T Q = I.
bool check_orthogonal(const FieldMat3& Q);

/// Translation making Q p(t) + b - p(psi(t)) parallel to q(psi(t)).
/// Empty when inconsistent; throws TranslationInvariant if b is not unique.
std::optional<FieldVec3> solve_b(const RuledSurface& surface, const PhiCandidate& phi, const FieldMat3& Q);

/// c(t) with Q p(t) + b = p(psi(t)) + c(t) q(psi(t)) identically.
std::optional<RatFunc<FieldElem>> recover_c(const RuledSurface& surface, const PhiCandidate& phi, const FieldMat3& Q,
                                            const FieldVec3& b);

/// Q x(t,s) + b = x(phi(t,s)) as an identity in (t,s); phi.c must be set.
bool verify_symmetry(const RuledSurface& surface, const PhiCandidate& phi, const FieldMat3& Q, const FieldVec3& b);

/// Throws NotAnIsometry if Q is not orthogonal and TranslationInvariant if
/// f has no fixed point.
Classification classify(const FieldMat3& Q, const FieldVec3& b);

/// Accepted symmetry together with its parameter map (c filled in).
struct SymmetryEntry {
  PhiCandidate phi;
  Isometry isometry;
};

/// Recovery for one candidate; empty when rejected. `vertex` is the cone
/// vertex for conical surfaces.
std::optional<SymmetryEntry> recover_isometry(const RuledSurface& surface, const PhiCandidate& phi,
                                              const std::optional<Vec3<Rational>>& vertex);

struct SymmetryReport {
  std::string surface_id;
  std::string mode;
  std::vector<SymmetryEntry> entries;
  std::vector<std::string> notes;

  /// Number of entries per kind; the identity is included.
  std::map<IsometryKind, int> counts() const;
};

/// Throws CylindricalInput and PositiveDimensional.
SymmetryReport full_pipeline(const RuledSurface& surface, SolveMode mode, const std::string& surface_id = "surface");

// Exact operations on isometries living in possibly different fields.

using AlgebraicMat3 = Mat3<AlgebraicNumber>;
using AlgebraicVec3 = Vec3<AlgebraicNumber>;

struct AlgebraicIsometry {
  AlgebraicMat3 Q;
  AlgebraicVec3 b;
};

AlgebraicIsometry to_algebraic(const Isometry& f);
/// (Q_f Q_g, Q_f b_g + b_f).
AlgebraicIsometry compose(const AlgebraicIsometry& f, const AlgebraicIsometry& g);
bool equal(const AlgebraicIsometry& f, const AlgebraicIsometry& g);
bool is_identity(const AlgebraicIsometry& f);

}  // namespace ruledsym
