// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef ISOCARTAN_MODEL_HPP
#define ISOCARTAN_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "isocartan/errors.hpp"

namespace isocartan {

/// Ambient geometry of a hypersurface model.  SpaceForm covers the constant
/// curvature cases; Compact/Noncompact are the general symmetric-space kinds.
struct AmbientKind {
  enum class Kind { Compact, Noncompact, SpaceForm };

  Kind kind = Kind::Compact;
  double c = 0.0;  // curvature, meaningful for SpaceForm only

  static AmbientKind compact() { return {Kind::Compact, 0.0}; }
  static AmbientKind noncompact() { return {Kind::Noncompact, 0.0}; }
  static AmbientKind space_form(double c) { return {Kind::SpaceForm, c}; }

  bool is_compact() const { return kind == Kind::Compact; }
  bool is_noncompact() const { return kind == Kind::Noncompact; }
  bool is_space_form() const { return kind == Kind::SpaceForm; }

  friend bool operator==(const AmbientKind&, const AmbientKind&) = default;
};

/// One simultaneous eigenblock of the shape operator (eigenvalue lambda) and
/// the normal Jacobi operator (eigenvalue mu), with its joint multiplicity.
struct CurvatureBlock {
  double lambda = 0.0;
  double mu = 0.0;
  int mult = 1;

  friend bool operator==(const CurvatureBlock&,
                         const CurvatureBlock&) = default;
};

/// A curvature-adapted hypersurface at a point, reduced to its block
/// spectrum.  Blocks with exactly equal (lambda, mu) are merged on
/// construction by summing multiplicities.
struct HypersurfaceModel {
  AmbientKind ambient;
  std::vector<CurvatureBlock> blocks;
  std::string name;

  static HypersurfaceModel make(std::string name, AmbientKind ambient,
                                std::vector<CurvatureBlock> blocks);

  int dimension() const;  // sum of block multiplicities
};

/// Merges exact-duplicate (lambda, mu) pairs; preserves first-seen order.
std::vector<CurvatureBlock> merge_blocks(std::vector<CurvatureBlock> blocks);

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;  // e.g. near-duplicate block pairs

  bool valid() const { return violations.empty(); }
};

/// Checks block invariants: positive multiplicities, mu sign consistent with
/// the ambient kind, no duplicate (lambda, mu) pairs.  Near-duplicates
/// (distance below 1e-12) produce a warning, not a violation.
ValidationReport validate(const HypersurfaceModel& model);

struct PropernessResult {
  bool proper = true;
  // The offending (lambda, mu) when not proper.
  std::optional<CurvatureBlock> witness;
};

/// A model is proper when no block with mu < 0 has lambda = +-sqrt(-mu)
/// within `tol`; only then do all blocks admit complex focal radii.
/// Throws WrongAmbientError unless the ambient is noncompact or a space form
/// of negative curvature.
PropernessResult is_proper(const HypersurfaceModel& model, double tol = 1e-9);

}  // namespace isocartan

#endif  // ISOCARTAN_MODEL_HPP
