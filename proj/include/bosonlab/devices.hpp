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

#ifndef BOSONLAB_DEVICES_HPP
#define BOSONLAB_DEVICES_HPP

#include <utility>
#include <variant>
#include <vector>

#include "bosonlab/fock.hpp"

namespace bosonlab {

// Generic mode mixer: generator (theta/2)(e^{i psi} a b^dag - e^{-i psi} a^dag b)
// followed by the relative phase e^{i (psi - phi)(n_a - n_b)/2}, which together
// enact the standard SU(2) matrix
//   [[ e^{-i(phi-psi)/2} cos(theta/2), -e^{-i(phi+psi)/2} sin(theta/2)],
//    [ e^{ i(phi+psi)/2} sin(theta/2),  e^{ i(phi-psi)/2} cos(theta/2)]]
// on (a, b) in the Heisenberg picture (see heisenberg_check).
struct BeamSplitterSpec {
  double theta = 0.0;
  double phi = 0.0;
  double psi = 0.0;
};

// Pair source: generator (r/2)(e^{-i psi} a b - e^{i psi} a^dag b^dag).
struct TwoModeSqueezerSpec {
  double r = 0.0;
  double psi = 0.0;
};

// Bilinear device in the monomials O_a = a^m (or a^dag^m when dagger_a) and
// O_b = b^n: generator (r/2)(e^{-i psi} O_a^dag O_b - e^{i psi} O_a O_b^dag).
struct GeneralBilinearSpec {
  int m = 1;
  int n = 1;
  double r = 0.0;
  double psi = 0.0;
  bool dagger_a = false;
};

struct DeviceSpec {
  std::variant<BeamSplitterSpec, TwoModeSqueezerSpec, GeneralBilinearSpec> variant;
};

// Sparse complex matrix in CSR form, sized for two-mode vectors.
struct SparseMatrix {
  int dim = 0;
  std::vector<int> row_start;  // dim+1 entries
  std::vector<int> col;
  std::vector<cplx> val;
  double one_norm = 0.0;  // max column absolute sum

  void apply(const cplx* x, cplx* y) const;
  std::vector<cplx> apply(const std::vector<cplx>& x) const;
  // max_ij |(K + K^dag)_ij|, for anti-Hermiticity checks.
  double anti_hermiticity_defect() const;
};

// Anti-Hermitian generator K with exp(K) the device unitary (for beam
// splitters, exp(K) times the diagonal phase applied inside evolve).
SparseMatrix build_generator(const DeviceSpec& device, int cutoff_a, int cutoff_b);

// y = exp(K) x via scaled adaptive Taylor application; never forms exp(K).
std::vector<cplx> expmv(const SparseMatrix& K, const std::vector<cplx>& x);

// Applies the device unitary. Output is renormalized; the truncation deficit
// is reported. Throws truncation_error when the deficit exceeds 1e-6.
std::pair<TwoModeVector, TruncationReport> evolve(const TwoModeVector& state,
                                                  const DeviceSpec& device);

// Maximum deviation of U^dag a U and U^dag b U from the SU(2) linear
// combination, over matrix elements between states whose total photon number
// is at least 2 below min(cutoff_a, cutoff_b).
double heisenberg_check(const BeamSplitterSpec& device, int cutoff_a, int cutoff_b);

// Strength of the device (theta or r), used for ratio diagnostics.
double device_strength(const DeviceSpec& device);

// Same device with the strength replaced, for sweeps over theta / r.
DeviceSpec with_strength(const DeviceSpec& device, double strength);

}  // namespace bosonlab

#endif  // BOSONLAB_DEVICES_HPP
