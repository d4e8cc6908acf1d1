// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0

#include "isocartan/fixtures.hpp"

#include <doctest.h>

#include <cmath>

#include "isocartan/cartan.hpp"
#include "isocartan/census.hpp"
#include "isocartan/focal.hpp"

using namespace isocartan;

namespace {

constexpr double kPi = 3.14159265358979323846;

const CurvatureBlock* block_with_mu(const HypersurfaceModel& m, double mu) {
  for (const auto& b : m.blocks)
    if (b.mu == doctest::Approx(mu)) return &b;
  return nullptr;
}

}  // namespace

TEST_CASE("complex hyperbolic sphere blocks") {
  FixtureSpec spec;
  spec.family = FixtureFamily::ComplexHyperbolicGeodesicSphere;
  spec.n = 2;
  spec.t = 1.0;
  const auto m = build(spec);
  REQUIRE(m.blocks.size() == 2);
  const auto* doubled = block_with_mu(m, -4.0);
  REQUIRE(doubled != nullptr);
  CHECK(doubled->lambda == doctest::Approx(2.0746).epsilon(1e-4));
  CHECK(doubled->mult == 1);
  const auto* base = block_with_mu(m, -1.0);
  REQUIRE(base != nullptr);
  CHECK(base->lambda == doctest::Approx(1.3130).epsilon(1e-4));
  CHECK(base->mult == 2);
}

TEST_CASE("umbilic sphere block with curvature scaling") {
  FixtureSpec spec;
  spec.family = FixtureFamily::SphereGeodesicSphere;
  spec.n = 5;
  spec.t = 0.7;
  spec.curvature = 4.0;
  const auto m = build(spec);
  REQUIRE(m.blocks.size() == 1);
  CHECK(m.blocks[0].lambda ==
        doctest::Approx(2.0 / std::tan(2.0 * 0.7)).epsilon(1e-12));
  CHECK(m.blocks[0].mu == doctest::Approx(4.0));
  CHECK(m.blocks[0].mult == 4);
  CHECK(m.ambient.is_space_form());
}

TEST_CASE("pole parameters are rejected") {
  FixtureSpec spec;
  spec.family = FixtureFamily::ComplexProjectiveGeodesicSphere;
  spec.n = 2;
  spec.t = kPi / 2.0;  // doubled angle hits pi
  CHECK_THROWS_AS(build(spec), PoleParamsError);
}

TEST_CASE("root-data tube over the g2 wall projection") {
  const auto proj = tube_projection("g2");
  REQUIRE(proj.classes.size() == 3);
  CHECK(proj.classes[0].beta == doctest::Approx(1.0));
  CHECK(proj.classes[1].beta == doctest::Approx(2.0));
  CHECK(proj.classes[2].beta == doctest::Approx(3.0));
  CHECK(proj.classes[0].total_mult == 2);
  CHECK(proj.classes[1].total_mult == 1);
  CHECK(proj.classes[2].total_mult == 2);
  CHECK(proj.kernel_mult == 1);

  const auto model = build_named("g2-tube", {{"s0", 0.7}});
  CHECK(is_proper(model).proper);
  const auto structural = check_theorem_c(model, proj);
  CHECK(structural.passed);

  // the tube dimension matches the census row for the split form
  const SymmetricSpaceEntry* g = find_entry("G");
  REQUIRE(g != nullptr);
  CHECK(model.dimension() == census_entry(*g).dim_m);
}

TEST_CASE("all-horizontal tube passes the structural checks only") {
  const auto model = build_named("g2-tube-allh", {});
  CHECK(is_proper(model).proper);
  CHECK(check_theorem_c(model, tube_projection("g2")).passed);
  // but it has no positive real focal radius, so it is not a tube
  CHECK_THROWS_AS(focal_radii_real(model, {0.0, 20.0}), EmptyWindowError);
}

TEST_CASE("catalog fixtures validate; noncompact ones are proper") {
  for (const auto& f : fixture_catalog()) {
    CAPTURE(f.name);
    const auto model = build(f.spec);
    CHECK(validate(model).valid());
    if (model.ambient.is_noncompact()) CHECK(is_proper(model).proper);
  }
}

TEST_CASE("acceptance model sets satisfy the identity at every radius") {
  Tolerances tol;
  for (const auto& model : acceptance_noncompact_models()) {
    CAPTURE(model.name);
    const auto radii =
        focal_radii_complex(model, {0.0, 3.0}, {-2.0 * kPi, 2.0 * kPi});
    for (const auto& r : radii) {
      const auto report = cartan_sum(model, r, tol);
      CAPTURE(r.value.real());
      CAPTURE(r.value.imag());
      CHECK(report.passed);
    }
  }
  for (const auto& model : acceptance_compact_models()) {
    CAPTURE(model.name);
    const auto radii = focal_radii_real(model, {0.0, 2.0 * kPi});
    for (const auto& r : radii) CHECK(cartan_sum(model, r, tol).passed);
  }
}

TEST_CASE("build_named applies overrides and rejects unknowns") {
  const auto m = build_named("cp2-sphere", {{"t", 0.4}, {"n", 3}});
  const auto* base = block_with_mu(m, 1.0);
  REQUIRE(base != nullptr);
  CHECK(base->mult == 4);  // 2n - 2 at n = 3
  CHECK(base->lambda == doctest::Approx(1.0 / std::tan(0.4)));
  CHECK_THROWS_AS(build_named("no-such-fixture", {}), Error);
  CHECK_THROWS_AS(build_named("cp2-sphere", {{"bogus", 1.0}}), Error);
}

TEST_CASE("hyperbolic tube fixture splits coth and tanh blocks") {
  FixtureSpec spec;
  spec.family = FixtureFamily::RealHyperbolicTube;
  spec.n = 4;
  spec.core_dim = 2;
  spec.t = 0.9;
  const auto m = build(spec);
  REQUIRE(m.blocks.size() == 2);
  CHECK(m.blocks[0].lambda == doctest::Approx(1.0 / std::tanh(0.9)));
  CHECK(m.blocks[0].mult == 1);
  CHECK(m.blocks[1].lambda == doctest::Approx(std::tanh(0.9)));
  CHECK(m.blocks[1].mult == 2);
}
