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

// Independent oracles for the unit and acceptance tests: closed forms and
// direct series summation, deliberately written without the library's ladder
// or constructor code paths.

#ifndef BOSONLAB_TESTS_ORACLES_HPP
#define BOSONLAB_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "bosonlab/fock.hpp"

namespace oracles {

using bosonlab::cplx;

// <psi| a^dag^p a^q |psi> by direct index summation.
inline cplx monomial_direct(const std::vector<cplx>& amps, int p, int q) {
  cplx acc(0.0, 0.0);
  const int dim = static_cast<int>(amps.size());
  for (int n = q; n < dim; ++n) {
    const int m = n - q + p;  // bra index
    if (m < 0 || m >= dim) continue;
    double log_f = 0.0;
    // sqrt(n!/(n-q)!) * sqrt(m!/(m-p)!), accumulated in logs.
    for (int i = 0; i < q; ++i) log_f += 0.5 * std::log(static_cast<double>(n - i));
    for (int i = 0; i < p; ++i) log_f += 0.5 * std::log(static_cast<double>(m - i));
    acc += std::conj(amps[static_cast<std::size_t>(m)]) * amps[static_cast<std::size_t>(n)] *
           std::exp(log_f);
  }
  return acc;
}

// Coherent amplitudes by direct series (term-by-term recurrence).
inline std::vector<cplx> coherent_amps(cplx alpha, int cutoff) {
  std::vector<cplx> amps(static_cast<std::size_t>(cutoff) + 1);
  cplx term = std::exp(-0.5 * std::norm(alpha));
  for (int n = 0; n <= cutoff; ++n) {
    amps[static_cast<std::size_t>(n)] = term;
    term *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  return amps;
}

// Squeezed-vacuum closed-form moments.
inline double squeezed_mean_n(double r) { return std::sinh(r) * std::sinh(r); }
inline cplx squeezed_a_squared(double r, double phi) {
  return -std::exp(cplx(0.0, phi)) * std::sinh(r) * std::cosh(r);
}

// Two-mode squeezed vacuum Schmidt series sqrt(1-t^2) sum t^n |n,n> with
// t = tanh(lambda); Schmidt weights give the reduced thermal state.
inline std::vector<double> tmsv_schmidt_probs(double lambda, int count) {
  const double t = std::tanh(lambda);
  std::vector<double> probs(static_cast<std::size_t>(count));
  double w = 1.0 - t * t;
  for (int n = 0; n < count; ++n) {
    probs[static_cast<std::size_t>(n)] = w;
    w *= t * t;
  }
  return probs;
}

inline bosonlab::FockVector random_state(std::mt19937& rng, int cutoff, int support) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  bosonlab::FockVector v(cutoff);
  for (int n = 0; n <= support && n <= cutoff; ++n) {
    v.amps[static_cast<std::size_t>(n)] = cplx(gauss(rng), gauss(rng));
  }
  v.normalize();
  return v;
}

inline double fidelity(const bosonlab::FockVector& a, const bosonlab::FockVector& b) {
  return std::abs(bosonlab::inner_product(a, b));
}

}  // namespace oracles

#endif  // BOSONLAB_TESTS_ORACLES_HPP
