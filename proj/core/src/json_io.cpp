// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0

#include "isocartan/json_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace isocartan {

namespace {

using Json = nlohmann::ordered_json;

Json ambient_to_json(const AmbientKind& ambient) {
  Json j;
  switch (ambient.kind) {
    case AmbientKind::Kind::Compact:
      j["kind"] = "compact";
      break;
    case AmbientKind::Kind::Noncompact:
      j["kind"] = "noncompact";
      break;
    case AmbientKind::Kind::SpaceForm:
      j["kind"] = "spaceform";
      j["c"] = ambient.c;
      break;
  }
  return j;
}

AmbientKind ambient_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("ambient: expected an object with a string 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "compact") return AmbientKind::compact();
  if (kind == "noncompact") return AmbientKind::noncompact();
  if (kind == "spaceform") {
    if (!j.contains("c") || !j["c"].is_number())
      throw ParseError("ambient: spaceform requires a numeric 'c'");
    return AmbientKind::space_form(j["c"].get<double>());
  }
  throw ParseError("ambient: unknown kind '" + kind + "'");
}

Json model_to_json_obj(const HypersurfaceModel& model) {
  Json j;
  j["name"] = model.name;
  j["ambient"] = ambient_to_json(model.ambient);
  j["blocks"] = Json::array();
  for (const auto& b : model.blocks)
    j["blocks"].push_back(
        Json{{"lambda", b.lambda}, {"mu", b.mu}, {"mult", b.mult}});
  return j;
}

HypersurfaceModel model_from_json_obj(const Json& j) {
  if (!j.is_object()) throw ParseError("model: expected a JSON object");
  if (!j.contains("ambient")) throw ParseError("model: missing 'ambient'");
  if (!j.contains("blocks") || !j["blocks"].is_array())
    throw ParseError("model: missing 'blocks' array");
  const std::string name =
      j.contains("name") && j["name"].is_string() ? j["name"] : "";
  const AmbientKind ambient = ambient_from_json(j["ambient"]);
  std::vector<CurvatureBlock> blocks;
  for (const auto& jb : j["blocks"]) {
    if (!jb.is_object() || !jb.contains("lambda") || !jb.contains("mu") ||
        !jb.contains("mult"))
      throw ParseError("block: requires 'lambda', 'mu' and 'mult'");
    if (!jb["lambda"].is_number() || !jb["mu"].is_number() ||
        !jb["mult"].is_number_integer())
      throw ParseError("block: 'lambda'/'mu' numeric, 'mult' integer");
    blocks.push_back({jb["lambda"].get<double>(), jb["mu"].get<double>(),
                      jb["mult"].get<int>()});
  }
  return HypersurfaceModel::make(name, ambient, std::move(blocks));
}

Json radius_to_json(const FocalRadius& r) {
  Json j;
  j["re"] = r.value.real();
  j["im"] = r.value.imag();
  j["mult"] = r.multiplicity;
  j["blocks"] = r.focal_blocks;
  return j;
}

Json term_to_json(const IdentityReport::Term& t,
                  const HypersurfaceModel& model) {
  const auto& b = model.blocks[t.block];
  Json j;
  j["block"] = t.block;
  j["lambda"] = b.lambda;
  j["mu"] = b.mu;
  j["mult"] = b.mult;
  j["in_S"] = t.in_s;
  if (t.in_s) {
    j["weight_re"] = t.weight.real();
    j["weight_im"] = t.weight.imag();
  }
  return j;
}

Json report_to_json_obj(const IdentityReport& report,
                        const HypersurfaceModel& model) {
  Json j;
  j["radius"] = Json{{"re", report.radius.real()},
                     {"im", report.radius.imag()}};
  j["terms"] = Json::array();
  for (const auto& t : report.terms) j["terms"].push_back(term_to_json(t, model));
  j["total_re"] = report.total.real();
  j["total_im"] = report.total.imag();
  j["abs_total"] = std::abs(report.total);
  j["passed"] = report.passed;
  return j;
}

}  // namespace

std::string model_to_json(const HypersurfaceModel& model) {
  return model_to_json_obj(model).dump(2) + "\n";
}

HypersurfaceModel model_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return model_from_json_obj(j);
}

HypersurfaceModel model_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return model_from_json(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string radii_to_json(const std::vector<FocalRadius>& radii) {
  Json j = Json::array();
  for (const auto& r : radii) j.push_back(radius_to_json(r));
  return j.dump(2) + "\n";
}

std::string report_to_json(const IdentityReport& report,
                           const HypersurfaceModel& model) {
  return report_to_json_obj(report, model).dump(2) + "\n";
}

std::string reports_to_json(const std::vector<IdentityReport>& reports,
                            const HypersurfaceModel& model) {
  Json j = Json::array();
  for (const auto& r : reports) j.push_back(report_to_json_obj(r, model));
  return j.dump(2) + "\n";
}

std::string report_to_text(const IdentityReport& report,
                           const HypersurfaceModel& model) {
  std::ostringstream os;
  os << std::setprecision(12);
  os << "radius = " << report.radius.real();
  if (report.radius.imag() != 0.0)
    os << (report.radius.imag() > 0 ? "+" : "") << report.radius.imag() << "i";
  os << "\n";
  os << "  lambda            mu                m     in_S  term\n";
  for (const auto& t : report.terms) {
    const auto& b = model.blocks[t.block];
    os << "  " << std::setw(16) << std::left << b.lambda << "  "
       << std::setw(16) << std::left << b.mu << "  " << std::setw(4)
       << std::left << b.mult << "  " << (t.in_s ? "yes " : "no  ") << "  ";
    if (t.in_s) {
      os << t.weight.real();
      if (t.weight.imag() != 0.0)
        os << (t.weight.imag() > 0 ? "+" : "") << t.weight.imag() << "i";
    } else {
      os << "(focal)";
    }
    os << "\n";
  }
  os << "  |total| = " << std::abs(report.total) << "  ["
     << (report.passed ? "pass" : "FAIL") << "]\n";
  return os.str();
}

}  // namespace isocartan
