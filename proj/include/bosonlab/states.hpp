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

#ifndef BOSONLAB_STATES_HPP
#define BOSONLAB_STATES_HPP

#include <variant>
#include <vector>

#include "bosonlab/fock.hpp"

namespace bosonlab {

struct CoherentSpec {
  cplx alpha{0.0, 0.0};
};

struct FockSpec {
  int n = 0;
};

struct SqueezedVacuumSpec {
  double r = 0.0;
  double phi = 0.0;
};

// Equal-weight superposition of n coherent states on a circle, with per-branch
// phases exp(i * relative_phases[k]) on alpha * exp(2*pi*i*k/n).
struct HigherCatSpec {
  cplx alpha{0.0, 0.0};
  int n = 1;
  std::vector<double> relative_phases;  // n entries; first conventionally 0
};

// Normalizable solution of a^k |psi> = eta a^dag^l |psi>, seeded at Fock
// level `seed` (support on indices == seed mod k+l).
struct GeneralizedKLSpec {
  int k = 1;
  int l = 0;
  cplx eta{0.0, 0.0};
  int seed = 0;
};

struct StateSpec {
  std::variant<CoherentSpec, FockSpec, SqueezedVacuumSpec, HigherCatSpec, GeneralizedKLSpec>
      variant;
  int cutoff = -1;  // -1: pick automatically per family
};

// Default truncation for a state with mean photon number mean_n.
int default_cutoff(double mean_n);

// Family-aware automatic cutoff for a StateSpec (used when spec.cutoff < 0).
int resolve_cutoff(const StateSpec& spec);

FockVector make_coherent(cplx alpha, int cutoff);
FockVector make_fock(int n, int cutoff);
FockVector make_squeezed_vacuum(double r, double phi, int cutoff);
FockVector make_higher_cat(cplx alpha, int n, const std::vector<double>& relative_phases,
                           int cutoff);
FockVector make_generalized_kl(int k, int l, cplx eta, int seed, int cutoff);

// Seed-0 closed-form construction, used as an independent cross-check of the
// recursion in make_generalized_kl.
FockVector make_generalized_kl_closed_form(int k, int l, cplx eta, int cutoff);

FockVector make_state(const StateSpec& spec);

}  // namespace bosonlab

#endif  // BOSONLAB_STATES_HPP
