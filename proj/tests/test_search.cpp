// Copyright 2026 Bosonlab Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>

#include "bosonlab/entanglement.hpp"
#include "bosonlab/search.hpp"
#include "bosonlab/states.hpp"
#include "oracles.hpp"

using namespace bosonlab;

namespace {

SearchConfig mixer_config(double N, int cutoff, int restarts, unsigned seed) {
  SearchConfig config;
  config.N = N;
  config.cutoff = cutoff;
  config.device = DeviceSpec{BeamSplitterSpec{0.01, 0.0, 0.0}};
  config.restarts = restarts;
  config.max_iters = 300;
  config.seed = seed;
  return config;
}

}  // namespace

TEST_CASE("zero-photon search lands on the vacuum floor") {
  SearchConfig config;
  config.N = 0.0;
  config.cutoff = 10;
  config.device = DeviceSpec{TwoModeSqueezerSpec{0.01, 0.2}};
  config.restarts = 2;
  config.seed = 7;
  const SearchResult res = maximize_generated_entropy(config);
  // Only the two-mode vacuum satisfies N = 0, and its predictor value is the
  // pair-source floor r^2/2.
  CHECK(res.best_value == doctest::Approx(0.5 * 0.01 * 0.01).epsilon(1e-9));
  CHECK(std::abs(res.best_state_a.amps[0]) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(res.constraint_violation < 1e-10);
}

TEST_CASE("mixer maximization approaches the closed-form bound") {
  const SearchConfig config = mixer_config(2.0, 12, 6, 123);
  const SearchResult res = maximize_generated_entropy(config);
  const double theta_sq = 0.01 * 0.01;
  const double bound = extremal_values(2.0).h_max_over_theta_sq;  // 4
  CHECK(res.best_value / theta_sq > bound * 0.98);
  CHECK(res.best_value / theta_sq <= bound + 1e-6);
  CHECK(res.constraint_violation < 1e-9);
}

TEST_CASE("mixer minimization finds a predictor null") {
  const SearchConfig config = mixer_config(1.0, 12, 6, 321);
  const SearchResult res = minimize_generated_entropy(config);
  CHECK(res.best_value < 1e-4 * 0.01 * 0.01);
  CHECK(res.constraint_violation < 1e-9);
}

TEST_CASE("pair-source minimization respects the floor") {
  SearchConfig config;
  config.N = 1.5;
  config.cutoff = 12;
  config.device = DeviceSpec{TwoModeSqueezerSpec{0.01, 0.0}};
  config.restarts = 4;
  config.seed = 9;
  const SearchResult res = minimize_generated_entropy(config);
  CHECK(res.best_value >= 0.5 * 0.01 * 0.01 * (1.0 - 1e-6));
  CHECK(res.constraint_violation < 1e-9);
}

TEST_CASE("search is reproducible for a fixed seed") {
  const SearchConfig config = mixer_config(1.0, 10, 3, 42);
  const SearchResult first = maximize_generated_entropy(config);
  const SearchResult second = maximize_generated_entropy(config);
  CHECK(first.best_value == second.best_value);
  CHECK(first.best_restart == second.best_restart);
  for (std::size_t n = 0; n < first.best_state_a.amps.size(); ++n) {
    CHECK(first.best_state_a.amps[n] == second.best_state_a.amps[n]);
    CHECK(first.best_state_b.amps[n] == second.best_state_b.amps[n]);
  }
}

TEST_CASE("reported value matches re-evaluating the predictor") {
  const SearchConfig config = mixer_config(1.5, 12, 3, 77);
  const SearchResult res = maximize_generated_entropy(config);
  const double re_eval = predict_H(res.best_state_a, res.best_state_b, config.device);
  CHECK(res.best_value == doctest::Approx(re_eval).epsilon(1e-10));
  const double n_total =
      mean_photon_number(res.best_state_a) + mean_photon_number(res.best_state_b);
  CHECK(n_total == doctest::Approx(config.N).epsilon(1e-8));
}

TEST_CASE("every restart stays below the closed-form bound") {
  for (unsigned seed : {1u, 2u, 3u}) {
    const SearchConfig config = mixer_config(2.0, 12, 2, seed);
    const SearchResult res = maximize_generated_entropy(config);
    CHECK(res.best_value <= (extremal_values(2.0).h_max_over_theta_sq + 1e-6) * 0.01 * 0.01);
  }
}

TEST_CASE("search configuration validation") {
  SearchConfig config = mixer_config(1.0, 10, 0, 0);
  CHECK_THROWS_AS(maximize_generated_entropy(config), std::invalid_argument);
  config = mixer_config(-1.0, 10, 2, 0);
  CHECK_THROWS_AS(maximize_generated_entropy(config), std::invalid_argument);
  config = mixer_config(5.0, 6, 2, 0);  // cutoff below ceil(N) + 8
  CHECK_THROWS_AS(maximize_generated_entropy(config), std::invalid_argument);
}
