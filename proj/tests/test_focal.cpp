// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0

#include "isocartan/focal.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "support/zero_scan.hpp"

using namespace isocartan;

namespace {

constexpr double kPi = 3.14159265358979323846;

HypersurfaceModel ch2() {
  // geodesic sphere of radius 1 in the complex hyperbolic plane
  return HypersurfaceModel::make(
      "ch2", AmbientKind::noncompact(),
      {{2.0 / std::tanh(2.0), -4.0, 1}, {1.0 / std::tanh(1.0), -1.0, 2}});
}

HypersurfaceModel cp2() {
  // geodesic sphere of radius pi/6 in the complex projective plane
  const double t = kPi / 6.0;
  return HypersurfaceModel::make(
      "cp2", AmbientKind::compact(),
      {{2.0 / std::tan(2.0 * t), 4.0, 1}, {1.0 / std::tan(t), 1.0, 2}});
}

const FocalRadius* radius_near(const std::vector<FocalRadius>& radii,
                               Complex value, double tol = 1e-9) {
  for (const auto& r : radii)
    if (std::abs(r.value - value) <= tol) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("tau values") {
  CHECK(tau(2.0, 0.0) == doctest::Approx(0.5));
  CHECK(tau(kPi / 4.0, 1.0) == doctest::Approx(1.0));
  CHECK(tau(2.0 * kPi / 3.0, 1.0) ==
        doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK_THROWS_AS(tau(kPi, 1.0), PoleError);
  CHECK_THROWS_AS(tau(0.0, 1.0), PoleError);
}

TEST_CASE("tau_hat values") {
  CHECK(tau_hat(Complex(1.0, 0.0), -1.0).real() ==
        doctest::Approx(1.0 / std::tanh(1.0)).epsilon(1e-12));
  CHECK(tau_hat(Complex(1.0, 0.0), -1.0).imag() == doctest::Approx(0.0));
  CHECK(tau_hat(Complex(0.4, 0.0), 0.0).real() == doctest::Approx(2.5));
  // shifting by a half period along the imaginary axis swaps coth and tanh
  const Complex shifted = tau_hat(Complex(1.0, kPi / 2.0), -1.0);
  CHECK(shifted.real() == doctest::Approx(std::tanh(1.0)).epsilon(1e-12));
  CHECK(std::abs(shifted.imag()) < 1e-12);
  CHECK_THROWS_AS(tau_hat(Complex(0.0, kPi), -1.0), PoleError);
  CHECK_THROWS_AS(tau_hat(Complex(0.0, 0.0), -1.0), PoleError);
}

TEST_CASE("tau_hat agrees with the real coth form for real arguments") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> zdist(0.1, 3.0);
  std::uniform_real_distribution<double> sdist(-9.0, -0.01);
  for (int i = 0; i < 1000; ++i) {
    const double z = zdist(rng);
    const double s = sdist(rng);
    const double a = std::sqrt(-s);
    const Complex value = tau_hat(Complex(z, 0.0), s);
    CHECK(value.imag() == doctest::Approx(0.0));
    CHECK(value.real() == doctest::Approx(a / std::tanh(z * a)).epsilon(1e-12));
  }
}

TEST_CASE("tau_hat is continuous at s = 0") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> re(-2.0, 2.0);
  for (int i = 0; i < 1000; ++i) {
    Complex z(re(rng), re(rng));
    if (std::abs(z) < 0.2) z += Complex(0.5, 0.0);
    const double s = -1e-10;
    CHECK(std::abs(tau_hat(z, s) - 1.0 / z) < 1e-9);
  }
}

TEST_CASE("jacobi coefficient basics") {
  CHECK(jacobi_coeff(Complex(3.7, -1.2), 0.0, 0.0) == Complex(1.0, 0.0));

  // mu = 1, lambda = cot(r): zero exactly at r
  const double r = 0.8;
  CHECK(std::abs(jacobi_coeff(Complex(r, 0.0), 1.0 / std::tan(r), 1.0)) <
        1e-14);

  // mu = -1, lambda = coth(1): zeros at 1 and 1 + pi i
  const double coth1 = 1.0 / std::tanh(1.0);
  CHECK(std::abs(jacobi_coeff(Complex(1.0, 0.0), coth1, -1.0)) < 1e-14);
  CHECK(std::abs(jacobi_coeff(Complex(1.0, kPi), coth1, -1.0)) < 1e-13);
}

TEST_CASE("real focal radii of the cp2 sphere") {
  const auto model = cp2();
  const auto radii = focal_radii_real(model, {0.0, kPi});
  REQUIRE(radii.size() == 2);

  const auto* first = radius_near(radii, Complex(kPi / 6.0, 0.0));
  REQUIRE(first != nullptr);
  CHECK(first->multiplicity == 3);  // both blocks collapse at the base radius
  CHECK(first->focal_blocks.size() == 2);

  const auto* second = radius_near(radii, Complex(2.0 * kPi / 3.0, 0.0));
  REQUIRE(second != nullptr);
  CHECK(second->multiplicity == 1);  // doubled class only
  // 7 pi / 6 sits outside the window
  CHECK(radius_near(radii, Complex(7.0 * kPi / 6.0, 0.0)) == nullptr);
}

TEST_CASE("flat block has the single radius 1/lambda") {
  const auto m = HypersurfaceModel::make("m", AmbientKind::noncompact(),
                                         {{0.25, 0.0, 4}});
  const auto radii = focal_radii_real(m, {0.0, 10.0});
  REQUIRE(radii.size() == 1);
  CHECK(radii[0].value.real() == doctest::Approx(4.0));
  CHECK(radii[0].multiplicity == 4);
}

TEST_CASE("umbilic sphere radii form the arctan lattice") {
  const auto m = HypersurfaceModel::make("s2", AmbientKind::space_form(1.0),
                                         {{1.0, 1.0, 1}});
  const auto radii = focal_radii_real(m, {0.0, 3.0 * kPi});
  REQUIRE(radii.size() == 3);
  CHECK(radii[0].value.real() == doctest::Approx(kPi / 4.0));
  CHECK(radii[1].value.real() == doctest::Approx(kPi / 4.0 + kPi));
  CHECK(radii[2].value.real() == doctest::Approx(kPi / 4.0 + 2.0 * kPi));
}

TEST_CASE("empty window raises") {
  const auto m = HypersurfaceModel::make("m", AmbientKind::noncompact(),
                                         {{0.25, 0.0, 1}});
  CHECK_THROWS_AS(focal_radii_real(m, {0.0, 1.0}), EmptyWindowError);
}

TEST_CASE("complex focal radii of the ch2 sphere") {
  const auto model = ch2();
  const auto radii = focal_radii_complex(model, {0.0, 3.0}, {-2.0 * kPi, 2.0 * kPi});
  REQUIRE(radii.size() == 9);

  const auto* base = radius_near(radii, Complex(1.0, 0.0));
  REQUIRE(base != nullptr);
  CHECK(base->multiplicity == 3);

  const auto* half = radius_near(radii, Complex(1.0, kPi / 2.0));
  REQUIRE(half != nullptr);
  CHECK(half->multiplicity == 1);

  // Both coefficients vanish one full half-lattice up: the mu = -4 block has
  // period pi/2, so 1 + pi i is focal for both blocks.
  const auto* full = radius_near(radii, Complex(1.0, kPi));
  REQUIRE(full != nullptr);
  CHECK(full->multiplicity == 3);
  CHECK(full->focal_blocks.size() == 2);
}

TEST_CASE("tanh block radii carry the half-period shift") {
  const double lambda = std::tanh(1.0);
  const auto m = HypersurfaceModel::make("m", AmbientKind::noncompact(),
                                         {{lambda, -1.0, 2}});
  const auto radii = focal_radii_complex(m, {0.0, 2.0}, {-7.0, 7.0});
  REQUIRE(radii.size() == 4);  // 1 + (k + 1/2) pi i for k = -2..1
  for (const auto& r : radii) {
    CHECK(r.value.real() == doctest::Approx(1.0));
    const double ratio = (r.value.imag() - kPi / 2.0) / kPi;
    CHECK(std::abs(ratio - std::round(ratio)) < 1e-12);
  }
}

TEST_CASE("non-proper blocks are radius-free") {
  const auto m = HypersurfaceModel::make(
      "m", AmbientKind::noncompact(), {{1.0, -1.0, 1}, {0.25, 0.0, 1}});
  const auto radii = focal_radii_complex(m, {0.0, 10.0}, {-10.0, 10.0});
  REQUIRE(radii.size() == 1);  // only the flat block contributes
  CHECK(radii[0].value.real() == doctest::Approx(4.0));
}

TEST_CASE("every reported radius kills its blocks and only its blocks") {
  for (const auto& model : {ch2(), cp2()}) {
    std::vector<FocalRadius> radii;
    if (model.ambient.is_noncompact())
      radii = focal_radii_complex(model, {0.0, 3.0}, {-6.5, 6.5});
    else
      radii = focal_radii_real(model, {0.0, 2.0 * kPi});
    for (const auto& r : radii) {
      for (std::size_t i = 0; i < model.blocks.size(); ++i) {
        const auto& b = model.blocks[i];
        const double coeff = std::abs(jacobi_coeff(r.value, b.lambda, b.mu));
        const bool focal =
            std::find(r.focal_blocks.begin(), r.focal_blocks.end(), i) !=
            r.focal_blocks.end();
        if (focal)
          CHECK(coeff < 1e-9);
        else
          CHECK(coeff > 1e-6);
      }
    }
  }
}

TEST_CASE("focal membership is equivalent to the kernel equation") {
  // a block is focal at r0 exactly when the kernel maps lambda onto it
  const auto model = ch2();
  const auto radii = focal_radii_complex(model, {0.0, 3.0}, {-6.5, 6.5});
  for (const auto& r : radii) {
    for (std::size_t i = 0; i < model.blocks.size(); ++i) {
      const auto& b = model.blocks[i];
      bool kernel_matches = false;
      try {
        kernel_matches = std::abs(tau_hat(r.value, b.mu) - b.lambda) <= 1e-9;
      } catch (const PoleError&) {
        kernel_matches = false;  // kernel pole: the coefficient cannot vanish
      }
      const bool listed =
          std::find(r.focal_blocks.begin(), r.focal_blocks.end(), i) !=
          r.focal_blocks.end();
      CHECK(listed == kernel_matches);
    }
  }

  const auto compact = cp2();
  for (const auto& r : focal_radii_real(compact, {0.0, 2.0 * kPi})) {
    for (std::size_t i = 0; i < compact.blocks.size(); ++i) {
      const auto& b = compact.blocks[i];
      bool kernel_matches = false;
      try {
        kernel_matches =
            std::abs(tau(r.value.real(), b.mu) - b.lambda) <= 1e-9;
      } catch (const PoleError&) {
        kernel_matches = false;
      }
      const bool listed =
          std::find(r.focal_blocks.begin(), r.focal_blocks.end(), i) !=
          r.focal_blocks.end();
      CHECK(listed == kernel_matches);
    }
  }
}

TEST_CASE("radii per block form arithmetic progressions") {
  const auto model = ch2();
  for (const auto& b : model.blocks) {
    const auto single = HypersurfaceModel::make(
        "b", AmbientKind::noncompact(), {b});
    const auto radii = focal_radii_complex(single, {0.0, 3.0}, {-9.0, 9.0});
    REQUIRE(radii.size() >= 3);
    const double step = kPi / std::sqrt(-b.mu);
    for (std::size_t i = 1; i < radii.size(); ++i) {
      CHECK(radii[i].value.real() ==
            doctest::Approx(radii[0].value.real()).epsilon(1e-12));
      CHECK(radii[i].value.imag() - radii[i - 1].value.imag() ==
            doctest::Approx(step).epsilon(1e-12));
    }
  }
}

TEST_CASE("complex radius sets are closed under conjugation") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> lam(0.2, 3.0);
  std::uniform_real_distribution<double> mu(-4.0, -0.2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<CurvatureBlock> blocks;
    for (int i = 0; i < 3; ++i) {
      double l = lam(rng);
      double m = mu(rng);
      if (std::abs(l - std::sqrt(-m)) < 0.05) l += 0.1;
      blocks.push_back({l, m, 1 + i});
    }
    const auto model =
        HypersurfaceModel::make("m", AmbientKind::noncompact(), blocks);
    const auto radii = focal_radii_complex(model, {0.0, 9.0}, {-7.0, 7.0});
    for (const auto& r : radii) {
      const auto* mate = radius_near(radii, std::conj(r.value), 1e-9);
      REQUIRE(mate != nullptr);
      CHECK(mate->multiplicity == r.multiplicity);
    }
  }
}

TEST_CASE("closed forms agree with a dense scan (real case)") {
  const auto model = cp2();
  const auto radii = focal_radii_real(model, {0.0, 2.0 * kPi});
  for (std::size_t i = 0; i < model.blocks.size(); ++i) {
    const auto& b = model.blocks[i];
    const auto scanned = testing::scan_real_zeros(
        [&](double s) {
          return jacobi_coeff(Complex(s, 0.0), b.lambda, b.mu).real();
        },
        1e-6, 2.0 * kPi);
    std::vector<double> predicted;
    for (const auto& r : radii)
      if (std::find(r.focal_blocks.begin(), r.focal_blocks.end(), i) !=
          r.focal_blocks.end())
        predicted.push_back(r.value.real());
    REQUIRE(scanned.size() == predicted.size());
    for (std::size_t k = 0; k < scanned.size(); ++k)
      CHECK(scanned[k] == doctest::Approx(predicted[k]).epsilon(1e-8));
  }
}

TEST_CASE("closed forms agree with the winding-count scan (complex case)") {
  const auto model = ch2();
  const testing::Rect rect{0.01, 2.0, -5.0, 5.0};
  const auto radii =
      focal_radii_complex(model, {rect.re_lo, rect.re_hi},
                          {rect.im_lo, rect.im_hi});
  for (std::size_t i = 0; i < model.blocks.size(); ++i) {
    const auto& b = model.blocks[i];
    auto f = [&](Complex s) { return jacobi_coeff(s, b.lambda, b.mu); };
    int predicted = 0;
    for (const auto& r : radii) {
      if (std::find(r.focal_blocks.begin(), r.focal_blocks.end(), i) ==
          r.focal_blocks.end())
        continue;
      ++predicted;
      // each closed-form radius encloses exactly one (simple) zero
      const testing::Rect box{r.value.real() - 1e-3, r.value.real() + 1e-3,
                              r.value.imag() - 1e-3, r.value.imag() + 1e-3};
      CHECK(testing::winding_zero_count(f, box, 32) == 1);
    }
    // the global count rules out any zero the closed form missed
    CHECK(testing::winding_zero_count(f, rect) == predicted);
  }
}
