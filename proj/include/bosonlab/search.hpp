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

#ifndef BOSONLAB_SEARCH_HPP
#define BOSONLAB_SEARCH_HPP

#include "bosonlab/devices.hpp"
#include "bosonlab/entanglement.hpp"
#include "bosonlab/fock.hpp"

namespace bosonlab {

struct SearchConfig {
  double N = 1.0;  // total mean photon number constraint
  int cutoff = 14;
  DeviceSpec device;
  int restarts = 8;
  int max_iters = 400;
  double step_tolerance = 1e-9;
  unsigned seed = 0;
};

struct SearchResult {
  double best_value = 0.0;  // second-order predicted H at the device strength
  FockVector best_state_a;
  FockVector best_state_b;
  double constraint_violation = 0.0;
  int iterations_used = 0;
  bool converged = false;
  int best_restart = 0;
};

// Projected gradient search over product states psi_a x psi_b with
// <n_a> + <n_b> = N, optimizing the second-order entropy predictor of the
// configured device.
SearchResult maximize_generated_entropy(const SearchConfig& config);
SearchResult minimize_generated_entropy(const SearchConfig& config);

}  // namespace bosonlab

#endif  // BOSONLAB_SEARCH_HPP
