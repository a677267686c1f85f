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


// Command-line front end over the C interface.
//
// Exit codes: 0 success, 1 parse error, 2 precondition violation or other
// library failure, 3 internal error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ruledsym/ruledsym.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitInternal = 3;

int exit_code_for(rs_status status) {
  switch (status) {
    case RS_OK: return kExitOk;
    case RS_ERR_PARSE: return kExitParse;
    case RS_ERR_INTERNAL: return kExitInternal;
    default: return kExitPrecondition;
  }
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

int report_failure(rs_status status, const std::string& message) {
  std::cerr << "{\"error\": {\"code\": \"" << rs_status_name(status) << "\", \"message\": \"" << json_escape(message)
            << "\"}}\n";
  return exit_code_for(status);
}

int report_failure(rs_status status) { return report_failure(status, rs_last_error()); }

bool write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  return static_cast<bool>(f);
}

// File path, "-" for standard input, or an inline JSON document.
bool read_input(const std::string& source, std::string& text) {
  if (source == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
    return true;
  }
  std::ifstream f(source, std::ios::binary);
  if (f) {
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
    return true;
  }
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') {
    text = source;
    return true;
  }
  return false;
}

bool split_pair(const std::string& s, std::string& a, std::string& b) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return false;
  a = s.substr(0, comma);
  b = s.substr(comma + 1);
  return !a.empty() && !b.empty();
}

struct SolveOptions {
  std::string mode = "all";
  std::string input;
  std::string id = "surface";
  unsigned precision_bits = 0;
  std::string output;
  std::string mesh_path;
  std::string t_range = "-2,2";
  std::string s_range = "-1,1";
  std::string samples = "50,20";
};

struct ImplicitOptions {
  std::string poly;
  bool assume_irreducible = false;
  unsigned precision_bits = 0;
  std::string output;
};

int emit_report(rs_report* report, const std::string& output) {
  char* json = nullptr;
  rs_status st = rs_report_json(report, &json);
  rs_report_free(report);
  if (st != RS_OK) return report_failure(st);
  const bool ok = write_text(output, json);
  rs_string_free(json);
  return ok ? kExitOk : report_failure(RS_ERR_INVALID_ARGUMENT, "cannot write " + output);
}

int run_mesh(const rs_surface* surface, const SolveOptions& o) {
  std::string t_lo, t_hi, s_lo, s_hi, nt, ns;
  if (!split_pair(o.t_range, t_lo, t_hi) || !split_pair(o.s_range, s_lo, s_hi) || !split_pair(o.samples, nt, ns))
    return report_failure(RS_ERR_PARSE, "ranges and samples take the form a,b");
  int t_samples = 0, s_samples = 0;
  try {
    t_samples = std::stoi(nt);
    s_samples = std::stoi(ns);
  } catch (const std::exception&) {
    return report_failure(RS_ERR_PARSE, "sample counts must be integers");
  }
  char* csv = nullptr;
  rs_status st = rs_emit_mesh(surface, t_lo.c_str(), t_hi.c_str(), s_lo.c_str(), s_hi.c_str(), t_samples, s_samples,
                              &csv);
  if (st != RS_OK) return report_failure(st);
  const bool ok = write_text(o.mesh_path, csv);
  rs_string_free(csv);
  return ok ? kExitOk : report_failure(RS_ERR_INVALID_ARGUMENT, "cannot write " + o.mesh_path);
}

int run_solve(const SolveOptions& o) {
  std::string text;
  if (!read_input(o.input, text)) return report_failure(RS_ERR_PARSE, "cannot read input " + o.input);
  rs_mode mode = RS_MODE_ALL;
  if (o.mode == "involutions") mode = RS_MODE_INVOLUTIONS;
  if (o.mode == "conical") mode = RS_MODE_CONICAL;
  rs_surface* surface = nullptr;
  rs_status st = rs_surface_from_json(text.c_str(), &surface);
  if (st != RS_OK) return report_failure(st);
  if (!o.mesh_path.empty()) {
    int code = run_mesh(surface, o);
    if (code != kExitOk) {
      rs_surface_free(surface);
      return code;
    }
  }
  rs_report* report = nullptr;
  st = rs_solve(surface, mode, o.id.c_str(), o.precision_bits, &report);
  rs_surface_free(surface);
  if (st != RS_OK) return report_failure(st);
  return emit_report(report, o.output);
}

int run_implicit(const ImplicitOptions& o) {
  if (!o.assume_irreducible)
    return report_failure(RS_ERR_INVALID_ARGUMENT,
                          "irreducibility of F cannot be checked; pass --assume-irreducible to assert it");
  rs_report* report = nullptr;
  rs_status st = rs_solve_implicit(o.poly.c_str(), o.precision_bits, &report);
  if (st != RS_OK) return report_failure(st);
  return emit_report(report, o.output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euclidean symmetries of rational ruled surfaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rs_version()));

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "Symmetries of x(t,s) = p(t) + s q(t) given as a JSON document");
  s->add_option("--mode", solve.mode, "all | involutions | conical")
      ->check(CLI::IsMember({"all", "involutions", "conical"}));
  s->add_option("--input", solve.input, "Surface JSON file, '-' for stdin, or inline JSON")->required();
  s->add_option("--id", solve.id, "Surface identifier copied into the report");
  s->add_option("--precision-bits", solve.precision_bits, "Interval zero-test budget 2^-bits before exact fallback");
  s->add_option("--output", solve.output, "Report path (default stdout)");
  s->add_option("--emit-mesh", solve.mesh_path, "Also write a t,s,x,y,z CSV point grid to this path");
  s->add_option("--t-range", solve.t_range, "Mesh parameter range lo,hi (rationals)");
  s->add_option("--s-range", solve.s_range, "Mesh ruling range lo,hi (rationals)");
  s->add_option("--samples", solve.samples, "Mesh sample counts nt,ns (each >= 2)");

  ImplicitOptions implicit;
  auto* im = app.add_subcommand("implicit", "Symmetries of the implicit surface F(x,y,z) = 0");
  im->add_option("--poly", implicit.poly, "Polynomial in x, y, z")->required();
  im->add_flag("--assume-irreducible", implicit.assume_irreducible, "Assert that F is irreducible");
  im->add_option("--precision-bits", implicit.precision_bits, "Interval zero-test budget 2^-bits before exact fallback");
  im->add_option("--output", implicit.output, "Report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }
  if (*s) return run_solve(solve);
  return run_implicit(implicit);
}
