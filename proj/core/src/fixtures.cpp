// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0

#include "isocartan/fixtures.hpp"

#include <cmath>
#include <sstream>

#include "isocartan/census.hpp"

namespace isocartan {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_cot_pole(double angle) {
  if (std::abs(std::sin(angle)) < 1e-9)
    throw PoleParamsError("radius parameter sits on a pole: angle = " +
                          std::to_string(angle));
}

void check_tan_pole(double angle) {
  if (std::abs(std::cos(angle)) < 1e-9)
    throw PoleParamsError("radius parameter sits on a pole: angle = " +
                          std::to_string(angle));
}

double cot(double x) { return std::cos(x) / std::sin(x); }
double coth(double x) { return std::cosh(x) / std::sinh(x); }

// Two-block rank-one spectra shared by the complex/quaternionic/octonionic
// families: one block at the doubled class, one at the base class.
HypersurfaceModel rank_one_sphere(const std::string& name, bool compact,
                                  double scale, double t, int mult_double,
                                  int mult_base) {
  if (t <= 0.0) throw Error(name + ": radius must be positive");
  if (scale <= 0.0) throw Error(name + ": curvature scale must be positive");
  std::vector<CurvatureBlock> blocks;
  if (compact) {
    check_cot_pole(2.0 * scale * t);
    check_cot_pole(scale * t);
    blocks.push_back({2.0 * scale * cot(2.0 * scale * t),
                      4.0 * scale * scale, mult_double});
    blocks.push_back({scale * cot(scale * t), scale * scale, mult_base});
    return HypersurfaceModel::make(name, AmbientKind::compact(),
                                   std::move(blocks));
  }
  blocks.push_back({2.0 * scale * coth(2.0 * scale * t),
                    -4.0 * scale * scale, mult_double});
  blocks.push_back({scale * coth(scale * t), -scale * scale, mult_base});
  return HypersurfaceModel::make(name, AmbientKind::noncompact(),
                                 std::move(blocks));
}

std::string family_tag(const FixtureSpec& s) {
  std::ostringstream os;
  switch (s.family) {
    case FixtureFamily::SphereGeodesicSphere:
      os << "sphere-sphere n=" << s.n;
      break;
    case FixtureFamily::RealHyperbolicTube:
      os << "hyperbolic-tube n=" << s.n << " core=" << s.core_dim;
      break;
    case FixtureFamily::ComplexProjectiveGeodesicSphere:
      os << "cp" << s.n << "-sphere";
      break;
    case FixtureFamily::ComplexHyperbolicGeodesicSphere:
      os << "ch" << s.n << "-sphere";
      break;
    case FixtureFamily::QuaternionicGeodesicSphere:
      os << (s.compact ? "hp" : "hh") << s.n << "-sphere";
      break;
    case FixtureFamily::CayleyGeodesicSphere:
      os << (s.compact ? "op2" : "oh2") << "-sphere";
      break;
    case FixtureFamily::RootDataTube:
      os << "root-tube";
      break;
  }
  os << " t=" << s.t;
  return os.str();
}

}  // namespace

HypersurfaceModel build(const FixtureSpec& spec) {
  const std::string name = family_tag(spec);
  switch (spec.family) {
    case FixtureFamily::SphereGeodesicSphere: {
      if (spec.n < 2) throw Error("sphere fixture needs n >= 2");
      const double c = spec.curvature > 0.0 ? spec.curvature : 1.0;
      const double b = std::sqrt(c);
      check_cot_pole(b * spec.t);
      const int core = spec.core_dim;
      if (core < 0 || core > spec.n - 2) throw Error("bad core dimension");
      std::vector<CurvatureBlock> blocks;
      blocks.push_back({b * cot(b * spec.t), c, spec.n - 1 - core});
      if (core > 0) {
        check_tan_pole(b * spec.t);
        blocks.push_back({-b * std::tan(b * spec.t), c, core});
      }
      return HypersurfaceModel::make(name, AmbientKind::space_form(c),
                                     std::move(blocks));
    }
    case FixtureFamily::RealHyperbolicTube: {
      if (spec.n < 2) throw Error("hyperbolic fixture needs n >= 2");
      if (spec.t <= 0.0) throw Error("tube radius must be positive");
      const double c = spec.curvature < 0.0 ? spec.curvature : -1.0;
      const double a = std::sqrt(-c);
      const int core = spec.core_dim;
      if (core < 0 || core > spec.n - 2) throw Error("bad core dimension");
      std::vector<CurvatureBlock> blocks;
      blocks.push_back({a * coth(a * spec.t), c, spec.n - 1 - core});
      if (core > 0) blocks.push_back({a * std::tanh(a * spec.t), c, core});
      return HypersurfaceModel::make(name, AmbientKind::space_form(c),
                                     std::move(blocks));
    }
    case FixtureFamily::ComplexProjectiveGeodesicSphere:
      if (spec.n < 2) throw Error("complex projective fixture needs n >= 2");
      return rank_one_sphere(name, true, spec.curvature, spec.t, 1,
                             2 * spec.n - 2);
    case FixtureFamily::ComplexHyperbolicGeodesicSphere:
      if (spec.n < 2) throw Error("complex hyperbolic fixture needs n >= 2");
      return rank_one_sphere(name, false, spec.curvature, spec.t, 1,
                             2 * spec.n - 2);
    case FixtureFamily::QuaternionicGeodesicSphere:
      if (spec.n < 2) throw Error("quaternionic fixture needs n >= 2");
      return rank_one_sphere(name, spec.compact, spec.curvature, spec.t, 3,
                             4 * spec.n - 4);
    case FixtureFamily::CayleyGeodesicSphere:
      // Multiplicity split (7, 8) mirrors the rank-one root data; it has no
      // independent desk oracle beyond that pattern.
      return rank_one_sphere(name, spec.compact, spec.curvature, spec.t, 7, 8);
    case FixtureFamily::RootDataTube: {
      const double s0 = spec.t;
      if (s0 <= 0.0) throw Error("tube radius must be positive");
      if (spec.classes.empty()) throw Error("root-data tube needs classes");
      std::vector<CurvatureBlock> blocks;
      for (const auto& cls : spec.classes) {
        if (cls.beta <= 0.0) throw Error("class beta must be positive");
        const double mu = -cls.beta * cls.beta;
        if (cls.vertical > 0)
          blocks.push_back(
              {cls.beta * coth(cls.beta * s0), mu, cls.vertical});
        if (cls.horizontal > 0)
          blocks.push_back(
              {cls.beta * std::tanh(cls.beta * s0), mu, cls.horizontal});
      }
      if (spec.zero_vertical > 0)
        blocks.push_back({1.0 / s0, 0.0, spec.zero_vertical});
      if (spec.zero_horizontal > 0)
        blocks.push_back({0.0, 0.0, spec.zero_horizontal});
      return HypersurfaceModel::make(name, AmbientKind::noncompact(),
                                     std::move(blocks));
    }
  }
  throw Error("unknown fixture family");
}

RootProjection tube_projection(const std::string& preset) {
  // Wall directions chosen so the projected classes chain in 1:2 (or 1:2:3)
  // ratios; those are the configurations whose tube spectra satisfy the
  // Cartan-type identity.
  if (preset == "a2") {
    const auto roots = make_root_system(RootType::A, 2);
    const std::vector<Rational> v{1, 0, -1};
    return project_roots(roots, v);
  }
  if (preset == "b2") {
    const auto roots = make_root_system(RootType::B, 2);
    const std::vector<Rational> v{1, 1};
    return project_roots(roots, v);
  }
  if (preset == "g2") {
    const auto roots = make_root_system(RootType::G2, 2);
    const std::vector<Rational> v{1, 0, -1};
    return project_roots(roots, v);
  }
  throw Error("unknown projection preset '" + preset + "'");
}

namespace {

FixtureSpec tube_spec_from_projection(const RootProjection& proj, double s0,
                                      const std::vector<std::pair<int, int>>&
                                          splits) {
  if (splits.size() != proj.classes.size())
    throw Error("one (vertical, horizontal) split per class required");
  FixtureSpec spec;
  spec.family = FixtureFamily::RootDataTube;
  spec.t = s0;
  for (std::size_t i = 0; i < proj.classes.size(); ++i) {
    const auto& cls = proj.classes[i];
    if (splits[i].first + splits[i].second != cls.total_mult)
      throw Error("split does not exhaust the class multiplicity");
    spec.classes.push_back(
        {cls.beta, splits[i].first, splits[i].second});
  }
  // Flat directions: one per rank beyond the projection line plus the
  // annihilated roots.  All horizontal: a vertical flat part is
  // incompatible with the identity at nonreal radii.
  spec.zero_vertical = 0;
  spec.zero_horizontal = (proj.rank - 1) + proj.kernel_mult;
  return spec;
}

std::vector<CatalogFixture> build_catalog() {
  std::vector<CatalogFixture> cat;
  auto add = [&](std::string name, std::string desc, FixtureSpec spec) {
    cat.push_back({std::move(name), std::move(desc), std::move(spec)});
  };

  FixtureSpec s;
  s.family = FixtureFamily::SphereGeodesicSphere;
  s.n = 3;
  s.t = kPi / 4.0;
  add("s3-sphere", "geodesic sphere in the 3-sphere", s);
  s.n = 5;
  s.t = 0.9;
  add("s5-sphere", "geodesic sphere in the 5-sphere", s);
  s.n = 4;
  s.core_dim = 2;
  s.t = 0.6;
  add("s4-tube", "tube around a totally geodesic 2-sphere in the 4-sphere", s);

  FixtureSpec h;
  h.family = FixtureFamily::RealHyperbolicTube;
  h.n = 4;
  h.t = 0.8;
  add("rh4-sphere", "geodesic sphere in real hyperbolic 4-space", h);
  h.n = 3;
  h.core_dim = 1;
  add("rh3-tube", "tube around a geodesic in real hyperbolic 3-space", h);

  FixtureSpec cp;
  cp.family = FixtureFamily::ComplexProjectiveGeodesicSphere;
  cp.n = 2;
  cp.t = kPi / 6.0;
  add("cp2-sphere", "geodesic sphere in the complex projective plane", cp);
  cp.n = 3;
  cp.t = 0.5;
  add("cp3-sphere", "geodesic sphere in complex projective 3-space", cp);
  cp.n = 4;
  cp.t = 0.7;
  add("cp4-sphere", "geodesic sphere in complex projective 4-space", cp);

  FixtureSpec ch;
  ch.family = FixtureFamily::ComplexHyperbolicGeodesicSphere;
  ch.n = 2;
  ch.t = 1.0;
  add("ch2-sphere", "geodesic sphere in the complex hyperbolic plane", ch);
  ch.n = 3;
  ch.t = 0.8;
  add("ch3-sphere", "geodesic sphere in complex hyperbolic 3-space", ch);
  ch.n = 4;
  ch.t = 1.2;
  add("ch4-sphere", "geodesic sphere in complex hyperbolic 4-space", ch);

  FixtureSpec q;
  q.family = FixtureFamily::QuaternionicGeodesicSphere;
  q.n = 2;
  q.t = kPi / 5.0;
  q.compact = true;
  add("hp2-sphere", "geodesic sphere in the quaternionic projective plane", q);
  q.t = 0.7;
  q.compact = false;
  add("hh2-sphere", "geodesic sphere in the quaternionic hyperbolic plane", q);

  FixtureSpec o;
  o.family = FixtureFamily::CayleyGeodesicSphere;
  o.t = 0.4;
  o.compact = true;
  add("op2-sphere",
      "geodesic sphere in the octonionic projective plane "
      "(multiplicity split unverified by an independent oracle)",
      o);
  o.t = 0.6;
  o.compact = false;
  add("oh2-sphere",
      "geodesic sphere in the octonionic hyperbolic plane "
      "(multiplicity split unverified by an independent oracle)",
      o);

  add("a2-tube", "tube over the a2 wall projection, all classes vertical",
      tube_spec_from_projection(tube_projection("a2"), 0.7,
                                {{2, 0}, {1, 0}}));
  add("b2-tube", "tube over the b2 wall projection, all classes vertical",
      tube_spec_from_projection(tube_projection("b2"), 0.7,
                                {{2, 0}, {1, 0}}));
  add("g2-tube", "tube over the g2 wall projection, all classes vertical",
      tube_spec_from_projection(tube_projection("g2"), 0.7,
                                {{2, 0}, {1, 0}, {2, 0}}));
  add("g2-tube-allh",
      "all-horizontal variant of g2-tube; satisfies the spectral structure "
      "checks but not the identity, kept for structural tests only",
      tube_spec_from_projection(tube_projection("g2"), 0.7,
                                {{0, 2}, {0, 1}, {0, 2}}));
  return cat;
}

}  // namespace

const std::vector<CatalogFixture>& fixture_catalog() {
  static const std::vector<CatalogFixture> catalog = build_catalog();
  return catalog;
}

const CatalogFixture* find_fixture(const std::string& name) {
  for (const auto& f : fixture_catalog())
    if (f.name == name) return &f;
  return nullptr;
}

HypersurfaceModel build_named(const std::string& name,
                              const std::map<std::string, double>& overrides) {
  const CatalogFixture* fixture = find_fixture(name);
  if (fixture == nullptr) throw Error("unknown fixture '" + name + "'");
  FixtureSpec spec = fixture->spec;
  for (const auto& [key, value] : overrides) {
    if (key == "t" || key == "s0") {
      spec.t = value;  // tubes keep their split, re-anchored at the new radius
    } else if (key == "n") {
      spec.n = static_cast<int>(value);
    } else if (key == "core_dim") {
      spec.core_dim = static_cast<int>(value);
    } else if (key == "curvature") {
      spec.curvature = value;
    } else {
      throw Error("unknown fixture parameter '" + key + "'");
    }
  }
  return build(spec);
}

std::vector<HypersurfaceModel> acceptance_compact_models() {
  std::vector<HypersurfaceModel> models;
  FixtureSpec cp;
  cp.family = FixtureFamily::ComplexProjectiveGeodesicSphere;
  cp.n = 2;
  cp.t = kPi / 6.0;
  models.push_back(build(cp));
  for (int n = 2; n <= 4; ++n)
    for (double t : {0.25, 0.45, 0.65, 0.85, 1.05}) {
      cp.n = n;
      cp.t = t;
      models.push_back(build(cp));
    }

  FixtureSpec q;
  q.family = FixtureFamily::QuaternionicGeodesicSphere;
  q.n = 2;
  q.t = kPi / 5.0;
  models.push_back(build(q));

  FixtureSpec s;
  s.family = FixtureFamily::SphereGeodesicSphere;
  s.n = 3;
  s.t = kPi / 4.0;
  models.push_back(build(s));
  s.n = 5;
  s.t = 0.9;
  models.push_back(build(s));
  s.n = 7;
  s.t = 1.1;
  models.push_back(build(s));
  return models;
}

std::vector<HypersurfaceModel> acceptance_noncompact_models() {
  std::vector<HypersurfaceModel> models;
  FixtureSpec ch;
  ch.family = FixtureFamily::ComplexHyperbolicGeodesicSphere;
  ch.n = 2;
  ch.t = 1.0;
  models.push_back(build(ch));
  for (int n = 2; n <= 4; ++n)
    for (double t : {0.6, 1.3}) {
      ch.n = n;
      ch.t = t;
      models.push_back(build(ch));
    }

  FixtureSpec q;
  q.family = FixtureFamily::QuaternionicGeodesicSphere;
  q.compact = false;
  q.n = 2;
  q.t = 0.7;
  models.push_back(build(q));

  // Root-data tubes: splits here are the ones compatible with the identity
  // (all-vertical always; partial splits only where the class chaining
  // cancels, see tests).
  const auto a2 = tube_projection("a2");
  const auto b2 = tube_projection("b2");
  const auto g2 = tube_projection("g2");
  const std::vector<double> s0s{0.3, 0.7, 1.5};
  const std::vector<std::vector<std::pair<int, int>>> a2_splits{
      {{2, 0}, {1, 0}}, {{1, 1}, {1, 0}}, {{1, 1}, {0, 1}}};
  const std::vector<std::vector<std::pair<int, int>>> b2_splits{
      {{2, 0}, {1, 0}}, {{0, 2}, {1, 0}}, {{1, 1}, {0, 1}}};
  for (std::size_t i = 0; i < s0s.size(); ++i) {
    models.push_back(build(tube_spec_from_projection(a2, s0s[i], a2_splits[i])));
    models.push_back(build(tube_spec_from_projection(b2, s0s[i], b2_splits[i])));
    models.push_back(build(tube_spec_from_projection(
        g2, s0s[i], {{2, 0}, {1, 0}, {2, 0}})));
  }
  return models;
}

}  // namespace isocartan
