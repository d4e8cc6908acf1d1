// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line surface: census tables, model validation, focal-radius
// enumeration, identity verification, structure checkers, fixtures.
// Exit codes: 0 pass, 1 identity/check failure, 2 input error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isocartan/cartan.hpp"
#include "isocartan/census.hpp"
#include "isocartan/fixtures.hpp"
#include "isocartan/focal.hpp"
#include "isocartan/json_io.hpp"
#include "isocartan/model.hpp"

namespace {

using namespace isocartan;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ParseError("cannot write '" + out_path + "'");
  out << text;
}

struct WindowOptions {
  std::vector<double> re;
  std::vector<double> im;

  Interval re_window(const HypersurfaceModel& model) const {
    if (re.size() == 2) return {re[0], re[1]};
    return default_re_window(model);
  }
  Interval im_window(const HypersurfaceModel& model) const {
    if (im.size() == 2) return {im[0], im[1]};
    return default_im_window(model);
  }
};

bool uses_complex_radii(const HypersurfaceModel& model) {
  if (model.ambient.is_noncompact()) return true;
  return model.ambient.is_space_form() && model.ambient.c < 0.0;
}

// Splits one CSV row, honoring double-quoted fields.
std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        current += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  fields.push_back(current);
  return fields;
}

std::vector<FocalRadius> enumerate_radii(const HypersurfaceModel& model,
                                         const WindowOptions& windows,
                                         double merge_tol) {
  if (uses_complex_radii(model))
    return focal_radii_complex(model, windows.re_window(model),
                               windows.im_window(model), merge_tol);
  return focal_radii_real(model, windows.re_window(model), merge_tol);
}

int run_tables(const std::string& format, const std::string& out_path,
               const std::string& golden_path) {
  std::vector<CensusRow> computed;
  for (const auto& e : builtin_census()) computed.push_back(census_entry(e));

  std::vector<CensusRow> reference = reference_census();
  if (!golden_path.empty()) {
    std::ifstream in(golden_path);
    if (!in) throw ParseError("cannot open '" + golden_path + "'");
    std::string line;
    std::getline(in, line);  // header
    reference.clear();
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto fields = split_csv_row(line);
      if (fields.size() != 6)
        throw ParseError(golden_path + ": expected 6 fields in '" + line +
                         "'");
      CensusRow row;
      row.label = fields[0];
      row.quotient_name = fields[1];
      try {
        row.sharp_dp = std::stoi(fields[2]);
        row.sharp_dp1 = std::stoi(fields[3]);
        row.m = std::stoi(fields[4]);
        row.dim_m = std::stoi(fields[5]);
      } catch (const std::logic_error&) {
        throw ParseError(golden_path + ": non-integer count in '" + line +
                         "'");
      }
      reference.push_back(row);
    }
  }

  std::ostringstream os;
  if (format == "md")
    os << census_to_markdown(computed);
  else if (format == "csv")
    os << census_to_csv(computed);
  else if (format == "json")
    os << census_to_json(computed);
  else
    throw ParseError("unknown format '" + format + "'");

  const auto diffs = diff_census(computed, reference);
  bool hard_mismatch = false;
  if (!diffs.empty() && format != "json") {
    os << "\ndiff vs stored reference:\n";
    for (const auto& d : diffs) {
      os << "  " << d.label << (d.flagged ? " [flagged]" : "") << ": "
         << (d.equal ? "match" : "MISMATCH") << " computed=(" << d.computed.sharp_dp
         << "," << d.computed.sharp_dp1 << "," << d.computed.m << ","
         << d.computed.dim_m << ") reference=(" << d.reference.sharp_dp << ","
         << d.reference.sharp_dp1 << "," << d.reference.m << ","
         << d.reference.dim_m << ")\n";
      if (!d.equal && !d.flagged) hard_mismatch = true;
    }
  } else {
    for (const auto& d : diffs)
      if (!d.equal && !d.flagged) hard_mismatch = true;
  }
  emit(os.str(), out_path);
  return hard_mismatch ? kExitCheckFailure : kExitPass;
}

int run_validate(const std::string& path) {
  const auto model = model_from_file(path);
  const auto report = validate(model);
  for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
  if (!report.valid()) {
    for (const auto& v : report.violations) std::cout << "violation: " << v << "\n";
    return kExitInputError;
  }
  std::cout << "valid: " << model.blocks.size() << " blocks, dimension "
            << model.dimension() << "\n";
  return kExitPass;
}

int run_focal(const std::string& path, const WindowOptions& windows,
              double merge_tol, const std::string& format,
              const std::string& out_path) {
  const auto model = model_from_file(path);
  const auto radii = enumerate_radii(model, windows, merge_tol);
  if (format == "json") {
    emit(radii_to_json(radii), out_path);
  } else {
    std::ostringstream os;
    os << std::setprecision(12);
    for (const auto& r : radii) {
      os << r.value.real();
      if (r.value.imag() != 0.0)
        os << (r.value.imag() > 0 ? "+" : "") << r.value.imag() << "i";
      os << "  mult=" << r.multiplicity << "  blocks=[";
      for (std::size_t i = 0; i < r.focal_blocks.size(); ++i)
        os << (i ? "," : "") << r.focal_blocks[i];
      os << "]\n";
    }
    emit(os.str(), out_path);
  }
  return kExitPass;
}

int run_verify(const std::string& path, const WindowOptions& windows,
               const Tolerances& tol, const std::string& format,
               const std::string& out_path) {
  const auto model = model_from_file(path);
  const auto radii = enumerate_radii(model, windows, tol.merge);
  std::vector<IdentityReport> reports;
  bool all_passed = true;
  for (const auto& r : radii) {
    reports.push_back(cartan_sum(model, r, tol));
    all_passed = all_passed && reports.back().passed;
  }
  if (format == "json") {
    emit(reports_to_json(reports, model), out_path);
  } else {
    std::ostringstream os;
    for (const auto& rep : reports) os << report_to_text(rep, model);
    os << (all_passed ? "all identities hold\n" : "identity FAILURE\n");
    emit(os.str(), out_path);
  }
  return all_passed ? kExitPass : kExitCheckFailure;
}

int run_check_c(const std::string& path, const std::string& entry_label,
                const std::string& v_text, double tol) {
  const auto model = model_from_file(path);
  std::optional<RootProjection> proj;
  if (!entry_label.empty()) {
    const SymmetricSpaceEntry* entry = find_entry(entry_label);
    if (entry == nullptr)
      throw ParseError("unknown census entry '" + entry_label + "'");
    if (v_text.empty())
      throw ParseError("--entry requires --v <comma-separated rationals>");
    std::vector<Rational> v;
    std::istringstream vs(v_text);
    std::string piece;
    while (std::getline(vs, piece, ',')) v.push_back(Rational::parse(piece));
    proj = project_roots(entry->roots, v);
  }
  const auto report = check_theorem_c(model, proj, tol);
  std::cout << std::setprecision(12);
  std::cout << "per-mu eigenvalue count <= 2: "
            << (report.per_mu_count_ok ? "ok" : "FAIL") << "\n";
  std::cout << "common real part s0 = " << report.s0
            << ", spectra in the coth/tanh sets: "
            << (report.spectra_ok ? "ok" : "FAIL") << "\n";
  if (proj.has_value())
    std::cout << "eigenvalue count " << report.distinct_lambda
              << " <= bound " << report.bound << ": "
              << (report.bound_ok ? "ok" : "FAIL") << "\n";
  for (const auto& f : report.failures) std::cout << "  " << f << "\n";
  return report.passed ? kExitPass : kExitCheckFailure;
}

int run_check_d(const std::string& path, double tol) {
  const auto model = model_from_file(path);
  const auto report = check_theorem_d(model, tol);
  std::cout << std::setprecision(12);
  std::cout << "unique positive real focal radius: "
            << (report.unique_radius_ok ? "ok" : "FAIL")
            << " (s0 = " << report.s0 << ")\n";
  std::cout << "focal image totally geodesic (max |kappa| = "
            << report.max_kappa << "): " << (report.kappa_ok ? "ok" : "FAIL")
            << "\n";
  std::cout << "tube eigenvalue flow: " << (report.flow_ok ? "ok" : "FAIL")
            << "\n";
  for (const auto& f : report.failures) std::cout << "  " << f << "\n";
  return report.passed ? kExitPass : kExitCheckFailure;
}

int run_fixtures_list() {
  for (const auto& f : fixture_catalog())
    std::cout << f.name << "  -  " << f.description << "\n";
  return kExitPass;
}

int run_fixtures_build(const std::string& name,
                       const std::vector<std::string>& params,
                       const std::string& out_path) {
  std::map<std::string, double> overrides;
  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos)
      throw ParseError("bad --param '" + p + "', expected key=value");
    try {
      overrides[p.substr(0, eq)] = std::stod(p.substr(eq + 1));
    } catch (const std::logic_error&) {
      throw ParseError("bad numeric value in --param '" + p + "'");
    }
  }
  const auto model = build_named(name, overrides);
  emit(model_to_json(model), out_path);
  return kExitPass;
}

int run_lifted_trace(double r1, double r2, int m1, int m2, std::int64_t i0,
                     std::int64_t K, bool window_mode) {
  const double value = window_mode ? lifted_trace_window(r1, r2, m1, m2, i0, K)
                                   : lifted_trace(r1, r2, m1, m2, i0, K);
  std::cout << std::setprecision(12) << value << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for curvature-adapted isoparametric "
               "hypersurface models"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  std::string golden_path;
  std::string model_path;
  std::string entry_label;
  std::string v_text;
  WindowOptions windows;
  Tolerances tol;
  double check_tol = 1e-9;

  auto add_window_opts = [&](CLI::App* cmd) {
    cmd->add_option("--re-window", windows.re, "real window lo hi")
        ->expected(2);
    cmd->add_option("--im-window", windows.im, "imaginary window lo hi")
        ->expected(2);
  };
  auto add_tol_opts = [&](CLI::App* cmd) {
    cmd->add_option("--tol", tol.accept, "identity acceptance tolerance");
    cmd->add_option("--membership-tol", tol.membership,
                    "focal-block exclusion tolerance");
    cmd->add_option("--merge-tol", tol.merge, "radius merge tolerance");
  };

  auto* tables = app.add_subcommand("tables", "emit the root-system census");
  tables->add_option("--format", format, "md|csv|json")->default_val("md");
  tables->add_option("--out", out_path, "output file (default stdout)");
  tables->add_option("--golden", golden_path, "reference CSV to diff against");

  auto* validate_cmd =
      app.add_subcommand("validate", "validate a model JSON file");
  validate_cmd->add_option("model", model_path)->required();

  auto* focal_cmd =
      app.add_subcommand("focal", "enumerate focal radii of a model");
  focal_cmd->add_option("model", model_path)->required();
  focal_cmd->add_option("--format", format, "json|text")->default_val("text");
  focal_cmd->add_option("--out", out_path, "output file");
  focal_cmd->add_option("--merge-tol", tol.merge, "radius merge tolerance");
  add_window_opts(focal_cmd);

  auto* verify_cmd = app.add_subcommand(
      "verify", "evaluate the Cartan-type sum at every focal radius");
  verify_cmd->add_option("model", model_path)->required();
  verify_cmd->add_option("--format", format, "json|text")->default_val("text");
  verify_cmd->add_option("--out", out_path, "output file");
  add_window_opts(verify_cmd);
  add_tol_opts(verify_cmd);

  auto* check_c = app.add_subcommand(
      "check-c", "check the spectral structure of a noncompact model");
  check_c->add_option("model", model_path)->required();
  check_c->add_option("--entry", entry_label, "census entry for the bound");
  check_c->add_option("--v", v_text, "projection direction (rationals)");
  check_c->add_option("--tol", check_tol, "check tolerance");

  auto* check_d = app.add_subcommand(
      "check-d", "check the tube structure of a noncompact model");
  check_d->add_option("model", model_path)->required();
  check_d->add_option("--tol", check_tol, "check tolerance");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "fixture catalog");
  auto* fixtures_list = fixtures_cmd->add_subcommand("list", "list fixtures");
  auto* fixtures_build =
      fixtures_cmd->add_subcommand("build", "emit a fixture model as JSON");
  std::string fixture_name;
  std::vector<std::string> fixture_params;
  fixtures_build->add_option("name", fixture_name)->required();
  fixtures_build->add_option("--param", fixture_params,
                             "override, e.g. --param t=0.5");
  fixtures_build->add_option("--out", out_path, "output file");

  auto* lifted = app.add_subcommand(
      "lifted-trace", "reciprocal-gap sum over the focal lattice");
  double r1 = 1.0, r2 = -1.0;
  int m1 = 1, m2 = 1;
  std::int64_t i0 = 1, K = 10;
  bool window_mode = false;
  lifted->add_option("--r1", r1, "positive lattice generator")->required();
  lifted->add_option("--r2", r2, "negative lattice generator")->required();
  lifted->add_option("--m1", m1, "multiplicity on odd lattice points");
  lifted->add_option("--m2", m2, "multiplicity on even lattice points");
  lifted->add_option("--i0", i0, "centre lattice index");
  lifted->add_option("--K", K, "truncation");
  lifted->add_flag("--window", window_mode,
                   "truncate over |k| <= K instead of around i0");

  CLI11_PARSE(app, argc, argv);

  try {
    if (tables->parsed()) return run_tables(format, out_path, golden_path);
    if (validate_cmd->parsed()) return run_validate(model_path);
    if (focal_cmd->parsed())
      return run_focal(model_path, windows, tol.merge, format, out_path);
    if (verify_cmd->parsed())
      return run_verify(model_path, windows, tol, format, out_path);
    if (check_c->parsed())
      return run_check_c(model_path, entry_label, v_text, check_tol);
    if (check_d->parsed()) return run_check_d(model_path, check_tol);
    if (fixtures_cmd->parsed()) {
      if (fixtures_list->parsed()) return run_fixtures_list();
      if (fixtures_build->parsed())
        return run_fixtures_build(fixture_name, fixture_params, out_path);
      std::cerr << "fixtures: expected 'list' or 'build'\n";
      return kExitInputError;
    }
    if (lifted->parsed())
      return run_lifted_trace(r1, r2, m1, m2, i0, K, window_mode);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
