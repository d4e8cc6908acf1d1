// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0

#include "isocartan/json_io.hpp"

#include <doctest.h>

#include <random>

#include "isocartan/cartan.hpp"

using namespace isocartan;

TEST_CASE("model round-trips through JSON unchanged") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> lam(-3.0, 3.0);
  std::uniform_real_distribution<double> mu(-4.0, 0.0);
  std::uniform_int_distribution<int> mult(1, 12);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<CurvatureBlock> blocks;
    for (int i = 0; i <= trial % 4; ++i)
      blocks.push_back({lam(rng), mu(rng), mult(rng)});
    const auto model = HypersurfaceModel::make(
        "model-" + std::to_string(trial), AmbientKind::noncompact(), blocks);
    const auto back = model_from_json(model_to_json(model));
    CHECK(back.name == model.name);
    CHECK(back.ambient == model.ambient);
    REQUIRE(back.blocks.size() == model.blocks.size());
    for (std::size_t i = 0; i < model.blocks.size(); ++i)
      CHECK(back.blocks[i] == model.blocks[i]);
  }
}

TEST_CASE("space-form curvature survives the round trip bit-exactly") {
  const auto model = HypersurfaceModel::make(
      "sf", AmbientKind::space_form(-0.123456789012345),
      {{1.5, -0.123456789012345, 2}});
  const auto back = model_from_json(model_to_json(model));
  CHECK(back.ambient.c == model.ambient.c);
  CHECK(back.blocks[0].mu == model.blocks[0].mu);
}

TEST_CASE("serialization is deterministic") {
  const auto model = HypersurfaceModel::make(
      "det", AmbientKind::noncompact(), {{1.25, -1.0, 2}, {0.5, 0.0, 1}});
  CHECK(model_to_json(model) == model_to_json(model));
}

TEST_CASE("parse errors name the offending part") {
  CHECK_THROWS_WITH_AS(model_from_json("{"), doctest::Contains("invalid JSON"),
                       ParseError);
  CHECK_THROWS_WITH_AS(model_from_json("{\"blocks\": []}"),
                       doctest::Contains("ambient"), ParseError);
  CHECK_THROWS_WITH_AS(
      model_from_json(
          "{\"ambient\": {\"kind\": \"noncompact\"}, \"blocks\": [{}]}"),
      doctest::Contains("block"), ParseError);
  CHECK_THROWS_WITH_AS(
      model_from_json("{\"ambient\": {\"kind\": \"spaceform\"}, \"blocks\": "
                      "[{\"lambda\": 1, \"mu\": 0, \"mult\": 1}]}"),
      doctest::Contains("c"), ParseError);
  CHECK_THROWS_AS(model_from_file("/nonexistent/path.json"), ParseError);
}

TEST_CASE("radius and report serialization shapes") {
  const auto model = HypersurfaceModel::make(
      "m", AmbientKind::noncompact(),
      {{1.0 / std::tanh(1.0), -1.0, 2}});
  const auto radii = focal_radii_complex(model, {0.0, 2.0}, {-4.0, 4.0});
  const std::string rj = radii_to_json(radii);
  CHECK(rj.find("\"re\"") != std::string::npos);
  CHECK(rj.find("\"mult\"") != std::string::npos);
  CHECK(rj.find("\"blocks\"") != std::string::npos);

  const auto report = cartan_sum(model, radii.front(), {});
  const std::string tj = report_to_text(report, model);
  CHECK(tj.find("in_S") != std::string::npos);
  CHECK(tj.find("|total|") != std::string::npos);
  const std::string jj = report_to_json(report, model);
  CHECK(jj.find("\"passed\"") != std::string::npos);
  CHECK(jj.find("\"abs_total\"") != std::string::npos);
}
