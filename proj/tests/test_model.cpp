// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0

#include "isocartan/model.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace isocartan;

TEST_CASE("validation accepts a clean noncompact model") {
  const auto m = HypersurfaceModel::make("m", AmbientKind::noncompact(),
                                         {{1.0, -1.0, 2}});
  CHECK(validate(m).valid());
}

TEST_CASE("mu sign violations are reported") {
  const auto wrong = HypersurfaceModel::make("m", AmbientKind::noncompact(),
                                             {{1.0, 1.0, 2}});
  const auto report = validate(wrong);
  REQUIRE(!report.valid());
  CHECK(report.violations[0].find("mu sign") != std::string::npos);

  const auto compact_wrong =
      HypersurfaceModel::make("m", AmbientKind::compact(), {{1.0, -1.0, 2}});
  CHECK(!validate(compact_wrong).valid());

  const auto sf = HypersurfaceModel::make("m", AmbientKind::space_form(-1.0),
                                          {{2.0, -1.0, 1}, {0.5, 0.0, 1}});
  CHECK(!validate(sf).valid());  // a space form admits only mu = c
}

TEST_CASE("equal pairs merge on construction") {
  const auto m = HypersurfaceModel::make(
      "m", AmbientKind::noncompact(), {{1.0, -1.0, 1}, {1.0, -1.0, 2}});
  REQUIRE(m.blocks.size() == 1);
  CHECK(m.blocks[0].mult == 3);
  CHECK(m.dimension() == 3);
  CHECK(validate(m).valid());
}

TEST_CASE("merge is idempotent") {
  std::vector<CurvatureBlock> blocks{
      {1.0, -1.0, 1}, {2.0, -4.0, 2}, {1.0, -1.0, 3}, {2.0, -4.0, 1}};
  const auto once = merge_blocks(blocks);
  const auto twice = merge_blocks(once);
  CHECK(once.size() == 2);
  CHECK(std::equal(once.begin(), once.end(), twice.begin(), twice.end()));
}

TEST_CASE("near-duplicate pairs warn without failing") {
  const auto m = HypersurfaceModel::make(
      "m", AmbientKind::noncompact(),
      {{1.0, -1.0, 1}, {1.0 + 1e-13, -1.0, 1}});
  const auto report = validate(m);
  CHECK(report.valid());
  CHECK(!report.warnings.empty());
}

TEST_CASE("properness detector") {
  const double coth1 = 1.0 / std::tanh(1.0);

  SUBCASE("coth block is proper") {
    const auto m = HypersurfaceModel::make("m", AmbientKind::noncompact(),
                                           {{coth1, -1.0, 2}});
    CHECK(is_proper(m).proper);
  }
  SUBCASE("lambda on the light cone is not") {
    const auto m = HypersurfaceModel::make("m", AmbientKind::noncompact(),
                                           {{1.0, -1.0, 1}});
    const auto result = is_proper(m);
    REQUIRE(!result.proper);
    REQUIRE(result.witness.has_value());
    CHECK(result.witness->lambda == 1.0);
    CHECK(result.witness->mu == -1.0);
  }
  SUBCASE("mu = 0 blocks impose no condition") {
    const auto m = HypersurfaceModel::make("m", AmbientKind::noncompact(),
                                           {{0.5, 0.0, 3}});
    CHECK(is_proper(m).proper);
  }
  SUBCASE("wrong ambient") {
    const auto m = HypersurfaceModel::make("m", AmbientKind::compact(),
                                           {{1.0, 1.0, 1}});
    CHECK_THROWS_AS(is_proper(m), WrongAmbientError);
  }
}

TEST_CASE("properness is invariant under permutation and multiplicity") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> lam(-3.0, 3.0);
  std::uniform_real_distribution<double> mu(-4.0, 0.0);
  std::uniform_int_distribution<int> mult(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<CurvatureBlock> blocks;
    const int n = 1 + trial % 4;
    for (int i = 0; i < n; ++i) blocks.push_back({lam(rng), mu(rng), 1});
    const auto base = HypersurfaceModel::make("m", AmbientKind::noncompact(),
                                              blocks);
    auto shuffled = blocks;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& b : shuffled) b.mult = mult(rng);
    const auto variant = HypersurfaceModel::make(
        "m", AmbientKind::noncompact(), shuffled);
    CHECK(is_proper(base).proper == is_proper(variant).proper);
  }
}
