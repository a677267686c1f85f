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


#include "ruledsym/ruledsym.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "ruledsym/errors.hpp"
#include "ruledsym/implicit.hpp"
#include "ruledsym/parser.hpp"
#include "ruledsym/recovery.hpp"
#include "ruledsym/report.hpp"

struct rs_surface {
  ruledsym::RuledSurface value;
};

struct rs_report {
  std::string json;
  std::vector<std::string> kinds;
};

namespace {

thread_local std::string last_error;

rs_status status_of(ruledsym::ErrorCode code) {
  using ruledsym::ErrorCode;
  switch (code) {
    case ErrorCode::Parse: return RS_ERR_PARSE;
    case ErrorCode::CylindricalInput: return RS_ERR_CYLINDRICAL_INPUT;
    case ErrorCode::PositiveDimensional: return RS_ERR_POSITIVE_DIMENSIONAL;
    case ErrorCode::ParamHeuristicFailed: return RS_ERR_PARAM_HEURISTIC_FAILED;
    case ErrorCode::PrecisionBudget: return RS_ERR_PRECISION_BUDGET;
    case ErrorCode::ZeroInput: return RS_ERR_ZERO_INPUT;
    case ErrorCode::ZeroDirection: return RS_ERR_ZERO_DIRECTION;
    case ErrorCode::NotAnIsometry: return RS_ERR_NOT_AN_ISOMETRY;
    case ErrorCode::TranslationInvariant: return RS_ERR_TRANSLATION_INVARIANT;
    case ErrorCode::InvalidArgument: return RS_ERR_INVALID_ARGUMENT;
  }
  return RS_ERR_INTERNAL;
}

rs_status fail(rs_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs body and maps exceptions to status codes.
template <class F>
rs_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return RS_OK;
  } catch (const ruledsym::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::invalid_argument& e) {
    return fail(RS_ERR_PARSE, e.what());
  } catch (const std::exception& e) {
    return fail(RS_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::array<std::string, 3> triple(const char* const* v) {
  for (int i = 0; i < 3; ++i)
    if (!v[i]) throw ruledsym::Error(ruledsym::ErrorCode::InvalidArgument, "null component string");
  return {v[0], v[1], v[2]};
}

void require(bool ok, const char* what) {
  if (!ok) throw ruledsym::Error(ruledsym::ErrorCode::InvalidArgument, what);
}

}  // namespace

extern "C" {

const char* rs_version(void) { return "1.0.0"; }

const char* rs_status_name(rs_status status) {
  switch (status) {
    case RS_OK: return "OK";
    case RS_ERR_PARSE: return "PARSE_ERROR";
    case RS_ERR_CYLINDRICAL_INPUT: return "CYLINDRICAL_INPUT";
    case RS_ERR_POSITIVE_DIMENSIONAL: return "POSITIVE_DIMENSIONAL";
    case RS_ERR_PARAM_HEURISTIC_FAILED: return "PARAM_HEURISTIC_FAILED";
    case RS_ERR_PRECISION_BUDGET: return "PRECISION_BUDGET";
    case RS_ERR_ZERO_INPUT: return "ZERO_INPUT";
    case RS_ERR_ZERO_DIRECTION: return "ZERO_DIRECTION";
    case RS_ERR_NOT_AN_ISOMETRY: return "NOT_AN_ISOMETRY";
    case RS_ERR_TRANSLATION_INVARIANT: return "TRANSLATION_INVARIANT";
    case RS_ERR_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case RS_ERR_INTERNAL: return "INTERNAL";
  }
  return "INTERNAL";
}

const char* rs_last_error(void) { return last_error.c_str(); }

rs_status rs_surface_from_json(const char* json, rs_surface** out) {
  return guarded([&] {
    require(json && out, "null argument");
    *out = new rs_surface{ruledsym::surface_from_json(json)};
  });
}

rs_status rs_surface_from_strings(const char* const* p, const char* const* q, rs_surface** out) {
  return guarded([&] {
    require(q && out, "null argument");
    auto qs = triple(q);
    if (p) {
      auto ps = triple(p);
      *out = new rs_surface{ruledsym::RuledSurface::from_strings(&ps, qs)};
    } else {
      *out = new rs_surface{ruledsym::RuledSurface::from_strings(nullptr, qs)};
    }
  });
}

void rs_surface_free(rs_surface* surface) { delete surface; }

rs_status rs_surface_to_json(const rs_surface* surface, char** out) {
  return guarded([&] {
    require(surface && out, "null argument");
    *out = copy_string(ruledsym::surface_to_json(surface->value));
  });
}

rs_status rs_solve(const rs_surface* surface, rs_mode mode, const char* surface_id, unsigned precision_bits,
                   rs_report** out) {
  return guarded([&] {
    require(surface && out, "null argument");
    require(mode == RS_MODE_ALL || mode == RS_MODE_INVOLUTIONS || mode == RS_MODE_CONICAL, "unknown mode");
    std::optional<ruledsym::PrecisionScope> scope;
    if (precision_bits > 0) scope.emplace(ruledsym::PrecisionPolicy::from_bits(precision_bits));
    if (mode == RS_MODE_CONICAL) require(ruledsym::detect_conical(surface->value).has_value(), "surface is not conical");
    const auto solve_mode = mode == RS_MODE_INVOLUTIONS ? ruledsym::SolveMode::Involutions : ruledsym::SolveMode::All;
    auto report = ruledsym::full_pipeline(surface->value, solve_mode, surface_id ? surface_id : "surface");
    if (mode == RS_MODE_CONICAL) report.mode = "conical";
    auto* r = new rs_report{ruledsym::report_to_json(report, surface->value), {}};
    for (const auto& e : report.entries) r->kinds.emplace_back(ruledsym::kind_name(e.isometry.classification.kind));
    *out = r;
  });
}

rs_status rs_solve_implicit(const char* polynomial, unsigned precision_bits, rs_report** out) {
  return guarded([&] {
    require(polynomial && out, "null argument");
    std::optional<ruledsym::PrecisionScope> scope;
    if (precision_bits > 0) scope.emplace(ruledsym::PrecisionPolicy::from_bits(precision_bits));
    auto F = ruledsym::parse_polynomial(polynomial, {"x", "y", "z"});
    if (F.is_zero()) throw ruledsym::ZeroInput("the implicit polynomial is zero");
    auto report = ruledsym::implicit_pipeline(F);
    auto* r = new rs_report{ruledsym::implicit_report_to_json(report), {}};
    for (const auto& e : report.entries) r->kinds.emplace_back(ruledsym::kind_name(e.isometry.classification.kind));
    *out = r;
  });
}

size_t rs_report_count(const rs_report* report) { return report ? report->kinds.size() : 0; }

const char* rs_report_kind(const rs_report* report, size_t index) {
  if (!report || index >= report->kinds.size()) return nullptr;
  return report->kinds[index].c_str();
}

rs_status rs_report_json(const rs_report* report, char** out) {
  return guarded([&] {
    require(report && out, "null argument");
    *out = copy_string(report->json);
  });
}

void rs_report_free(rs_report* report) { delete report; }

rs_status rs_emit_mesh(const rs_surface* surface, const char* t_lo, const char* t_hi, const char* s_lo,
                       const char* s_hi, int t_samples, int s_samples, char** out) {
  return guarded([&] {
    require(surface && t_lo && t_hi && s_lo && s_hi && out, "null argument");
    using ruledsym::parse_rational;
    auto rows = ruledsym::sample_mesh(surface->value, {parse_rational(t_lo), parse_rational(t_hi)},
                                      {parse_rational(s_lo), parse_rational(s_hi)}, t_samples, s_samples);
    *out = copy_string(ruledsym::mesh_to_csv(rows));
  });
}

void rs_string_free(char* text) { std::free(text); }

}  // extern "C"
