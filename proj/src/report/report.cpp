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


#include "ruledsym/report.hpp"

#include <json.hpp>

#include "ruledsym/errors.hpp"
#include "ruledsym/parser.hpp"

namespace ruledsym {

namespace {

using nlohmann::json;

const std::vector<std::string> kXYZ = {"x", "y", "z"};

Rational display_width() {
  Integer d;
  mpz_ui_pow_ui(d.get_mpz_t(), 10, 30);
  return Rational(Integer(1), d);
}

json algebraic_json(const AlgebraicNumber& a) {
  if (a.is_rational()) return {{"rat", to_string(a.rational())}};
  Interval iv = a.enclosure(display_width());
  return {{"minpoly", to_string(a.minimal_poly(), "x")},
          {"interval", json::array({to_string(iv.lo), to_string(iv.hi)})},
          {"approx", a.to_decimal(30)}};
}

json field_json(const FieldElem& x) {
  if (x.is_rational()) return {{"rat", to_string(x.rational())}};
  return algebraic_json(x.to_algebraic());
}

json vec_json(const FieldVec3& v) { return json::array({field_json(v[0]), field_json(v[1]), field_json(v[2])}); }

json mat_json(const FieldMat3& m) { return json::array({vec_json(m[0]), vec_json(m[1]), vec_json(m[2])}); }

json poly_json(const Poly<FieldElem>& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(field_json(c));
  return out;
}

bool rational_coefficients(const Poly<FieldElem>& p) {
  for (const auto& c : p.coeffs())
    if (!c.is_rational()) return false;
  return true;
}

UniPoly to_rational_poly(const Poly<FieldElem>& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coeffs()) c.push_back(x.rational());
  return UniPoly(std::move(c));
}

// Coefficient lists are in ascending degree.
json ratfunc_json(const RatFunc<FieldElem>& f) {
  json out = {{"num", poly_json(f.num())}, {"den", poly_json(f.den())}};
  if (rational_coefficients(f.num()) && rational_coefficients(f.den()))
    out["text"] = to_string(RationalFunction(to_rational_poly(f.num()), to_rational_poly(f.den())));
  return out;
}

const char* locus_type_name(FixedLocus::Type t) {
  switch (t) {
    case FixedLocus::Type::AllSpace: return "all-space";
    case FixedLocus::Type::Plane: return "plane";
    case FixedLocus::Type::Line: return "line";
    case FixedLocus::Type::Point: return "point";
    case FixedLocus::Type::None: return "none";
  }
  return "none";
}

json locus_json(const FixedLocus& locus) {
  json out = {{"type", locus_type_name(locus.type)}};
  switch (locus.type) {
    case FixedLocus::Type::Plane:
      out["normal"] = vec_json(locus.direction);
      out["offset"] = field_json(locus.offset);
      break;
    case FixedLocus::Type::Line:
      out["point"] = vec_json(locus.point);
      out["direction"] = vec_json(locus.direction);
      break;
    case FixedLocus::Type::Point: out["point"] = vec_json(locus.point); break;
    default: break;
  }
  return out;
}

json isometry_json(const Isometry& iso) {
  const Classification& c = iso.classification;
  json out = {{"kind", kind_name(c.kind)}, {"Q", mat_json(iso.Q)}, {"b", vec_json(iso.b)}, {"fixed_locus", locus_json(c.locus)}};
  out["angle"] = c.angle ? json{{"cos", field_json(c.angle->cos)}, {"sin", algebraic_json(c.angle->sin)}} : json(nullptr);
  return out;
}

json counts_json(const std::map<IsometryKind, int>& counts) {
  json out = json::object();
  for (const auto& [kind, n] : counts) out[kind_name(kind)] = n;
  return out;
}

json string_array(const std::array<std::string, 3>& a) { return json::array({a[0], a[1], a[2]}); }

json surface_json(const RuledSurface& surface) {
  json out = {{"q", string_array(surface.q_strings())}, {"n", surface.n()}};
  out["p"] = string_array(surface.p_strings());
  return out;
}

std::array<std::string, 3> read_triple(const json& doc, const char* key) {
  const json& v = doc.at(key);
  if (!v.is_array() || v.size() != 3) throw ParseError(std::string("\"") + key + "\" must be an array of 3 strings");
  std::array<std::string, 3> out;
  for (size_t i = 0; i < 3; ++i) {
    if (!v[i].is_string()) throw ParseError(std::string("\"") + key + "\" must be an array of 3 strings");
    out[i] = v[i].get<std::string>();
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

RuledSurface surface_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("q")) throw ParseError("surface document needs a \"q\" array");
  auto q = read_triple(doc, "q");
  if (!doc.contains("p") || doc["p"].is_null()) return RuledSurface::from_strings(nullptr, q);
  auto p = read_triple(doc, "p");
  return RuledSurface::from_strings(&p, q);
}

std::string surface_to_json(const RuledSurface& surface) {
  return dump({{"p", string_array(surface.p_strings())}, {"q", string_array(surface.q_strings())}});
}

std::string number_to_json(const FieldElem& x) { return field_json(x).dump(); }

std::string report_to_json(const SymmetryReport& report, const RuledSurface& surface) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json item = isometry_json(e.isometry);
    const Mobius& m = e.phi.mobius;
    item["mobius"] = {{"alpha", field_json(m.alpha)},
                      {"beta", field_json(m.beta)},
                      {"gamma", field_json(m.gamma)},
                      {"delta", field_json(m.delta)}};
    item["k"] = field_json(e.phi.k);
    item["c"] = e.phi.c ? ratfunc_json(*e.phi.c) : json(nullptr);
    entries.push_back(std::move(item));
  }
  json surf = surface_json(surface);
  surf["id"] = report.surface_id;
  json out = {{"surface", surf},
              {"mode", report.mode},
              {"isometries", entries},
              {"count", report.entries.size()},
              {"counts", counts_json(report.counts())},
              {"notes", report.notes}};
  return dump(out);
}

std::string implicit_report_to_json(const ImplicitReport& report) {
  json entries = json::array();
  std::map<IsometryKind, int> counts;
  for (const auto& e : report.entries) {
    json item = isometry_json(e.isometry);
    item["lambda"] = field_json(e.lambda);
    item["supplementary"] = e.supplementary;
    entries.push_back(std::move(item));
    ++counts[e.isometry.classification.kind];
  }
  json section = nullptr;
  if (report.section) {
    const auto& s = *report.section;
    section = {{"plane", kXYZ[static_cast<size_t>(s.variable)] + " = " + to_string(s.value)},
               {"solved_for", kXYZ[static_cast<size_t>(s.solved_variable)]},
               {"cone_q", string_array(s.cone.q_strings())}};
  }
  json out = {{"polynomial", to_string(report.F, kXYZ)},
              {"highest_form", to_string(report.FN, kXYZ)},
              {"section", section},
              {"cone_counts", counts_json(report.cone_report.counts())},
              {"isometries", entries},
              {"count", report.entries.size()},
              {"counts", counts_json(counts)},
              {"notes", report.notes}};
  return dump(out);
}

std::vector<MeshRow> sample_mesh(const RuledSurface& surface, std::pair<Rational, Rational> t_range,
                                 std::pair<Rational, Rational> s_range, int t_samples, int s_samples) {
  if (t_samples < 2 || s_samples < 2) throw Error(ErrorCode::InvalidArgument, "mesh sample counts must be at least 2");
  if (t_range.second <= t_range.first || s_range.second <= s_range.first)
    throw Error(ErrorCode::InvalidArgument, "mesh ranges must be non-empty");
  std::vector<MeshRow> rows;
  const Rational dt = (t_range.second - t_range.first) / (t_samples - 1);
  const Rational ds = (s_range.second - s_range.first) / (s_samples - 1);
  for (int i = 0; i < t_samples; ++i) {
    const Rational t = t_range.first + dt * i;
    bool pole = false;
    for (const auto& f : surface.p()) pole = pole || is_zero(f.den().eval(t));
    if (pole) continue;
    std::array<Rational, 3> base, dir;
    for (size_t k = 0; k < 3; ++k) {
      base[k] = surface.p()[k].eval(t);
      dir[k] = surface.q()[k].eval(t);
    }
    for (int j = 0; j < s_samples; ++j) {
      const Rational s = s_range.first + ds * j;
      MeshRow row{t, s, {}};
      for (size_t k = 0; k < 3; ++k) row.point[k] = base[k] + s * dir[k];
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string mesh_to_csv(const std::vector<MeshRow>& rows) {
  std::string out = "t,s,x,y,z\n";
  for (const auto& r : rows) {
    out += to_decimal(r.t, 12) + "," + to_decimal(r.s, 12);
    for (const auto& x : r.point) out += "," + to_decimal(x, 12);
    out += "\n";
  }
  return out;
}

}  // namespace ruledsym
