// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0

#include "isocartan/model.hpp"

#include <cmath>
#include <sstream>

namespace isocartan {

namespace {

std::string block_str(const CurvatureBlock& b) {
  std::ostringstream os;
  os << "(lambda=" << b.lambda << ", mu=" << b.mu << ", mult=" << b.mult << ")";
  return os.str();
}

}  // namespace

std::vector<CurvatureBlock> merge_blocks(std::vector<CurvatureBlock> blocks) {
  std::vector<CurvatureBlock> merged;
  for (const auto& b : blocks) {
    bool found = false;
    for (auto& m : merged) {
      if (m.lambda == b.lambda && m.mu == b.mu) {
        m.mult += b.mult;
        found = true;
        break;
      }
    }
    if (!found) merged.push_back(b);
  }
  return merged;
}

HypersurfaceModel HypersurfaceModel::make(std::string name, AmbientKind ambient,
                                          std::vector<CurvatureBlock> blocks) {
  return HypersurfaceModel{ambient, merge_blocks(std::move(blocks)),
                           std::move(name)};
}

int HypersurfaceModel::dimension() const {
  int dim = 0;
  for (const auto& b : blocks) dim += b.mult;
  return dim;
}

ValidationReport validate(const HypersurfaceModel& model) {
  ValidationReport report;
  auto fail = [&](const std::string& msg) { report.violations.push_back(msg); };

  if (model.blocks.empty()) fail("model has no blocks");

  for (const auto& b : model.blocks) {
    if (b.mult < 1) fail("mult < 1 in block " + block_str(b));
    if (!std::isfinite(b.lambda) || !std::isfinite(b.mu))
      fail("non-finite entry in block " + block_str(b));
    switch (model.ambient.kind) {
      case AmbientKind::Kind::Compact:
        if (b.mu < 0.0) fail("mu sign: negative mu in compact-type block " +
                             block_str(b));
        break;
      case AmbientKind::Kind::Noncompact:
        if (b.mu > 0.0) fail("mu sign: positive mu in noncompact-type block " +
                             block_str(b));
        break;
      case AmbientKind::Kind::SpaceForm:
        if (b.mu != model.ambient.c)
          fail("mu sign: space form of curvature admits only mu = c, got " +
               block_str(b));
        break;
    }
  }

  for (std::size_t i = 0; i < model.blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < model.blocks.size(); ++j) {
      const auto& a = model.blocks[i];
      const auto& b = model.blocks[j];
      if (a.lambda == b.lambda && a.mu == b.mu) {
        fail("duplicate (lambda, mu) pair " + block_str(a) +
             "; merge before use");
      } else if (std::hypot(a.lambda - b.lambda, a.mu - b.mu) < 1e-12) {
        report.warnings.push_back("near-duplicate blocks " + block_str(a) +
                                  " and " + block_str(b));
      }
    }
  }
  return report;
}

PropernessResult is_proper(const HypersurfaceModel& model, double tol) {
  const bool negative_space_form =
      model.ambient.is_space_form() && model.ambient.c < 0.0;
  if (!model.ambient.is_noncompact() && !negative_space_form)
    throw WrongAmbientError(
        "is_proper: model must be of noncompact type or a negatively curved "
        "space form");

  for (const auto& b : model.blocks) {
    if (b.mu >= 0.0) continue;  // the condition ranges over mu < 0 only
    const double a = std::sqrt(-b.mu);
    if (std::abs(b.lambda - a) <= tol || std::abs(b.lambda + a) <= tol)
      return {false, b};
  }
  return {true, std::nullopt};
}

}  // namespace isocartan
