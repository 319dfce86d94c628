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
#include <numbers>
#include <random>

#include "bosonlab/entanglement.hpp"
#include "bosonlab/states.hpp"
#include "oracles.hpp"

using namespace bosonlab;

namespace {

DeviceSpec bs(double theta, double phi, double psi) {
  return DeviceSpec{BeamSplitterSpec{theta, phi, psi}};
}

DeviceSpec tms(double r, double psi) { return DeviceSpec{TwoModeSqueezerSpec{r, psi}}; }

}  // namespace

TEST_CASE("reduced density of a product state is rank one") {
  std::mt19937 rng(41);
  const FockVector a = oracles::random_state(rng, 10, 10);
  const FockVector b = oracles::random_state(rng, 10, 10);
  const DensityMatrix rho = reduced_density(tensor_product(a, b), Mode::A);
  for (int i = 0; i < rho.dim; ++i) {
    for (int j = 0; j < rho.dim; ++j) {
      const cplx expected = a.amps[static_cast<std::size_t>(i)] *
                            std::conj(a.amps[static_cast<std::size_t>(j)]);
      CHECK(std::abs(rho.at(i, j) - expected) < 1e-12);
    }
  }
  CHECK(purity(rho) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("reduced density of a Bell pair is maximally mixed") {
  TwoModeVector bell(1, 1);
  bell.at(0, 1) = 1.0 / std::sqrt(2.0);
  bell.at(1, 0) = 1.0 / std::sqrt(2.0);
  const DensityMatrix rho = reduced_density(bell, Mode::A);
  CHECK(std::abs(rho.at(0, 0) - cplx(0.5, 0.0)) < 1e-14);
  CHECK(std::abs(rho.at(1, 1) - cplx(0.5, 0.0)) < 1e-14);
  CHECK(std::abs(rho.at(0, 1)) < 1e-14);
  CHECK(linear_entropy(bell) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("pair source vacuum reduces to the thermal state") {
  auto [out, rep] = evolve(tensor_product(make_fock(0, 25), make_fock(0, 25)), tms(0.2, 0.3));
  const DensityMatrix rho = reduced_density(out, Mode::B);
  const auto probs = oracles::tmsv_schmidt_probs(0.1, 8);
  for (int n = 0; n < 8; ++n) {
    CHECK(std::abs(rho.at(n, n) - cplx(probs[static_cast<std::size_t>(n)], 0.0)) < 1e-8);
    if (n > 0) CHECK(std::abs(rho.at(n, n - 1)) < 1e-12);
  }
}

TEST_CASE("linear entropy reference values") {
  TwoModeVector product(1, 1);
  product.at(0, 0) = 1.0;
  CHECK(linear_entropy(product) == doctest::Approx(0.0));

  TwoModeVector bell(1, 1);
  bell.at(0, 1) = 1.0 / std::sqrt(2.0);
  bell.at(1, 0) = 1.0 / std::sqrt(2.0);
  CHECK(linear_entropy(bell) == doctest::Approx(0.5).epsilon(1e-12));

  TwoModeVector triplet(2, 2);
  triplet.at(0, 0) = 1.0 / std::sqrt(3.0);
  triplet.at(1, 1) = 1.0 / std::sqrt(3.0);
  triplet.at(2, 2) = 1.0 / std::sqrt(3.0);
  CHECK(linear_entropy(triplet) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("linear entropy is symmetric in the kept mode") {
  std::mt19937 rng(42);
  TwoModeVector state(9, 9);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (auto& amp : state.amps) amp = cplx(gauss(rng), gauss(rng));
  state.normalize();
  CHECK(linear_entropy_via(state, Mode::A) ==
        doctest::Approx(linear_entropy_via(state, Mode::B)).epsilon(1e-10));
}

TEST_CASE("mixer predictor vanishes for coherent inputs") {
  const FockVector a = make_coherent(cplx(1.2, 0.0), 25);
  const FockVector b = make_coherent(cplx(0.5, -0.6), 25);
  CHECK(std::abs(predict_H_beamsplitter(a, b, 0.1, 0.7)) < 1e-12);
}

TEST_CASE("matched squeezed pair is a predictor null") {
  const double psi_dev = 0.45;
  const FockVector a = make_squeezed_vacuum(0.5, 0.2, 40);
  const FockVector b = make_squeezed_vacuum(0.5, 0.2 + 2.0 * psi_dev, 40);
  PredictorTerms terms;
  const double h = predict_H_beamsplitter(a, b, 0.02, psi_dev, &terms);
  CHECK(std::abs(h) < 1e-12 * terms.f);
  CHECK(std::cos(terms.Theta) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("anti-matched squeezed pair hits the mixer extremum") {
  const double r = std::asinh(1.0);  // <n> = 1 per mode
  const FockVector a = make_squeezed_vacuum(r, 0.0, 60);
  const FockVector b = make_squeezed_vacuum(r, std::numbers::pi, 60);  // psi = 0, offset pi
  const double h = predict_H_beamsplitter(a, b, 0.01, 0.0);
  CHECK(h / (0.01 * 0.01) == doctest::Approx(4.0).epsilon(1e-7));
  CHECK(extremal_values(2.0).h_max_over_theta_sq == doctest::Approx(4.0));
}

TEST_CASE("pair-source predictor floor") {
  SUBCASE("vacuum inputs") {
    const FockVector vac = make_fock(0, 10);
    const double h = predict_H_two_mode_squeezer(vac, vac, 0.01, 0.3);
    CHECK(2.0 * h / (0.01 * 0.01) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("coherent inputs sit on the same floor") {
    const FockVector a = make_coherent(cplx(0.9, 0.2), 25);
    const FockVector b = make_coherent(cplx(-0.3, 0.7), 25);
    const double h = predict_H_two_mode_squeezer(a, b, 0.01, 0.3);
    CHECK(2.0 * h / (0.01 * 0.01) == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("positivity with margin on random states") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
      const FockVector a = oracles::random_state(rng, 15, 8);
      const FockVector b = oracles::random_state(rng, 15, 8);
      const double h = predict_H_two_mode_squeezer(a, b, 0.02, 0.9);
      CHECK(h >= 0.5 * 0.02 * 0.02 * (1.0 - 1e-9));
    }
  }
}

TEST_CASE("general predictor reduces to the special forms") {
  std::mt19937 rng(44);
  for (int trial = 0; trial < 8; ++trial) {
    const FockVector a = oracles::random_state(rng, 16, 8);
    const FockVector b = oracles::random_state(rng, 16, 8);
    const double psi_dev = 0.3 + 0.2 * trial;
    const double via_general_bs =
        predict_H_general(a, b, GeneralBilinearSpec{1, 1, 0.013, psi_dev, false});
    const double via_bs = predict_H_beamsplitter(a, b, 0.013, psi_dev);
    CHECK(via_general_bs == doctest::Approx(via_bs).epsilon(1e-10));

    const double via_general_tms =
        predict_H_general(a, b, GeneralBilinearSpec{1, 1, 0.013, psi_dev, true});
    const double via_tms = predict_H_two_mode_squeezer(a, b, 0.013, psi_dev);
    CHECK(via_general_tms == doctest::Approx(via_tms).epsilon(1e-10));
  }
}

TEST_CASE("two even cats null the quadratic pair device at second order") {
  const FockVector cat_a = make_higher_cat(cplx(1.5, 0.0), 2, {0.0, 0.0}, 30);
  const FockVector cat_b = make_higher_cat(cplx(1.5, 0.0), 2, {0.0, 0.0}, 30);
  const double h = predict_H_general(cat_a, cat_b, GeneralBilinearSpec{2, 2, 0.02, 0.0, false});
  CHECK(std::abs(h) < 1e-12);
}

TEST_CASE("aligned-phase compact form for unequal squeezers") {
  // With the phase offset matched to the device, the mixer prediction
  // collapses to theta^2 sinh^2(rb - ra) / 2.
  const double ra = 0.4;
  const double rb = 0.7;
  const double psi_dev = 0.25;
  const FockVector a = make_squeezed_vacuum(ra, 0.1, 50);
  const FockVector b = make_squeezed_vacuum(rb, 0.1 + 2.0 * psi_dev, 50);
  const double theta = 0.01;
  const double h = predict_H_beamsplitter(a, b, theta, psi_dev);
  const double A = std::sinh(ra) * std::sinh(ra);
  const double B = std::sinh(rb) * std::sinh(rb);
  const double ga = std::sinh(ra) * std::cosh(ra);
  const double gb = std::sinh(rb) * std::cosh(rb);
  const double reference = theta * theta * ((A + B) / 2.0 + A * B - ga * gb);
  CHECK(h == doctest::Approx(reference).epsilon(1e-8));
  CHECK(reference == doctest::Approx(theta * theta * 0.5 * std::pow(std::sinh(rb - ra), 2))
                         .epsilon(1e-10));
}

TEST_CASE("predictor is symmetric under mode swap") {
  std::mt19937 rng(45);
  const FockVector a = oracles::random_state(rng, 14, 7);
  const FockVector b = oracles::random_state(rng, 14, 7);
  const double forward = predict_H_beamsplitter(a, b, 0.02, 0.6);
  const double swapped = predict_H_beamsplitter(b, a, 0.02, -0.6);
  CHECK(forward == doctest::Approx(swapped).epsilon(1e-10));
}

TEST_CASE("extremal closed forms") {
  const ExtremalValues zero = extremal_values(0.0);
  CHECK(zero.f_max == doctest::Approx(0.0));
  CHECK(zero.h_max_over_theta_sq == doctest::Approx(0.0));

  const ExtremalValues two = extremal_values(2.0);
  CHECK(two.f_max == doctest::Approx(2.0));
  CHECK(two.g_max == doctest::Approx(2.0));
  CHECK(two.h_max_over_theta_sq == doctest::Approx(4.0));

  const ExtremalValues four = extremal_values(4.0);
  CHECK(four.f_max == doctest::Approx(6.0));
  CHECK(four.h_max_over_theta_sq == doctest::Approx(12.0));

  CHECK_THROWS_AS(extremal_values(-1.0), std::invalid_argument);
}

TEST_CASE("exact and predicted entropies agree at small strength") {
  std::mt19937 rng(46);
  for (int trial = 0; trial < 4; ++trial) {
    const FockVector a = oracles::random_state(rng, 20, 6);
    const FockVector b = oracles::random_state(rng, 20, 6);
    const EntropyComparison cmp = compare_exact_vs_predicted(a, b, bs(0.01, 0.3, 0.8));
    if (cmp.predicted_second_order > 1e-10) {
      CHECK(cmp.exact == doctest::Approx(cmp.predicted_second_order).epsilon(1e-2));
    } else {
      CHECK(cmp.exact < 1e-7);
    }
  }
}
