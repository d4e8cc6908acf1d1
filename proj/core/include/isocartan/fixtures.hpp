// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef ISOCARTAN_FIXTURES_HPP
#define ISOCARTAN_FIXTURES_HPP

#include <map>
#include <string>
#include <vector>

#include "isocartan/model.hpp"
#include "isocartan/rootsys.hpp"

namespace isocartan {

/// Families of block models known to satisfy the standing hypotheses, used
/// as test vectors for the identity and structure checkers.
enum class FixtureFamily {
  SphereGeodesicSphere,
  RealHyperbolicTube,
  ComplexProjectiveGeodesicSphere,
  ComplexHyperbolicGeodesicSphere,
  QuaternionicGeodesicSphere,
  CayleyGeodesicSphere,
  RootDataTube,
};

/// Vertical/horizontal split of one projection class of a root-data tube:
/// `vertical` directions collapse onto the focal submanifold at s0 and carry
/// eigenvalue beta coth(beta s0); `horizontal` ones carry beta tanh(beta s0).
struct TubeClassSplit {
  double beta = 1.0;
  int vertical = 0;
  int horizontal = 0;
};

struct FixtureSpec {
  FixtureFamily family = FixtureFamily::SphereGeodesicSphere;
  int n = 2;            // dimension parameter of the family
  int core_dim = 0;     // dimension of the totally geodesic core (tubes)
  double t = 0.5;       // hypersurface radius
  double curvature = 1.0;  // space-form curvature scale (sphere/hyperbolic)
  bool compact = true;     // for families with both signs

  // RootDataTube only.
  std::vector<TubeClassSplit> classes;
  int zero_vertical = 0;    // flat directions with eigenvalue 1/s0
  int zero_horizontal = 0;  // flat directions with eigenvalue 0
};

/// Builds the block model of a fixture.  Throws PoleParamsError when the
/// radius parameter sits on a pole of the compact spectra (t sqrt(mu) in
/// pi Z) and Error for malformed parameters.
HypersurfaceModel build(const FixtureSpec& spec);

/// A named, ready-to-run catalog entry.
struct CatalogFixture {
  std::string name;
  std::string description;
  FixtureSpec spec;
};

/// Catalog of named fixtures addressable from the command line.  Parameters
/// `t`, `n`, `core_dim`, `s0`, `curvature` can be overridden per build.
const std::vector<CatalogFixture>& fixture_catalog();

const CatalogFixture* find_fixture(const std::string& name);

/// Builds a catalog fixture with numeric parameter overrides
/// (keys: t, s0, n, core_dim, curvature).
HypersurfaceModel build_named(const std::string& name,
                              const std::map<std::string, double>& overrides);

/// Fixture sets exercised by the acceptance suite.  The noncompact set
/// contains only models that satisfy the Cartan-type identity (and hence the
/// tube-structure checks); the structural-only variants are excluded.
std::vector<HypersurfaceModel> acceptance_compact_models();
std::vector<HypersurfaceModel> acceptance_noncompact_models();

/// Wall-projection presets used by the root-data tubes ("a2", "b2", "g2").
RootProjection tube_projection(const std::string& preset);

}  // namespace isocartan

#endif  // ISOCARTAN_FIXTURES_HPP
