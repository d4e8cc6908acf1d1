// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "isocartan/cartan.hpp"
#include "isocartan/census.hpp"
#include "isocartan/fixtures.hpp"
#include "isocartan/focal.hpp"

using namespace isocartan;

namespace {

void BM_CensusRows(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& e : builtin_census())
      benchmark::DoNotOptimize(census_entry(e));
  }
}
BENCHMARK(BM_CensusRows);

void BM_ProjectRootsE8(benchmark::State& state) {
  const auto e8 = make_root_system(RootType::E8, 8);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> num(-5, 5);
  std::vector<std::vector<Rational>> directions;
  for (int i = 0; i < 16; ++i) {
    std::vector<Rational> v;
    for (int k = 0; k < 8; ++k) v.push_back(Rational(num(rng), 3));
    if (v[0].is_zero()) v[0] = Rational(1);
    directions.push_back(std::move(v));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_roots(e8, directions[i++ % 16]));
  }
}
BENCHMARK(BM_ProjectRootsE8);

void BM_FocalRadiiComplex(benchmark::State& state) {
  const auto model = build_named("ch4-sphere", {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        focal_radii_complex(model, {0.0, 3.0}, {-20.0, 20.0}));
  }
}
BENCHMARK(BM_FocalRadiiComplex);

void BM_CartanSweep(benchmark::State& state) {
  const auto model = build_named("g2-tube", {});
  const auto radii =
      focal_radii_complex(model, {0.0, 3.0}, {-20.0, 20.0});
  const Tolerances tol;
  for (auto _ : state) {
    for (const auto& r : radii)
      benchmark::DoNotOptimize(cartan_sum(model, r, tol));
  }
}
BENCHMARK(BM_CartanSweep);

}  // namespace

BENCHMARK_MAIN();
