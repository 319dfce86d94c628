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

#ifndef BOSONLAB_ENTANGLEMENT_HPP
#define BOSONLAB_ENTANGLEMENT_HPP

#include <vector>

#include "bosonlab/devices.hpp"
#include "bosonlab/fock.hpp"

namespace bosonlab {

// Reduced single-mode density matrix, row-major, Hermitian, trace 1.
struct DensityMatrix {
  int dim = 0;
  std::vector<cplx> data;

  cplx& at(int i, int j) { return data[static_cast<std::size_t>(i) * dim + j]; }
  const cplx& at(int i, int j) const { return data[static_cast<std::size_t>(i) * dim + j]; }
};

// Moment package behind the second-order entropy predictors.
struct PredictorTerms {
  double A = 0.0;      // <a^dag a> - |<a>|^2
  double B = 0.0;      // same for mode b
  cplx var_a_dag;      // Var(a^dag) = conj(Var(a))
  cplx var_a;          // Var(a)
  cplx var_b;          // Var(b)
  double psi = 0.0;    // device phase entering e^{-2 i psi}
  double f = 0.0;      // (A+B)/2 + A B
  double g = 0.0;      // |Var(a^dag) Var(b)|
  double Theta = 0.0;  // arg Var(b) + arg Var(a^dag) - 2 psi
  double N = 0.0;      // <n_a> + <n_b>
};

struct EntropyComparison {
  double exact = 0.0;
  double predicted_second_order = 0.0;
  double device_strength = 0.0;
  double ratio_exact_over_strength_sq = 0.0;
};

struct ExtremalValues {
  double f_max = 0.0;
  double g_max = 0.0;
  double h_max_over_theta_sq = 0.0;
};

DensityMatrix reduced_density(const TwoModeVector& state, Mode keep);

// Tr[rho^2] via the squared Frobenius norm.
double purity(const DensityMatrix& rho);

// 1 - Tr[(Tr_b rho)^2]; symmetric in the traced mode.
double linear_entropy(const TwoModeVector& state);
double linear_entropy_via(const TwoModeVector& state, Mode keep);

// Second-order mode-mixer prediction
//   H = theta^2 { (A+B)/2 + A B - Re[e^{-2 i psi} Var(a^dag) Var(b)] }.
double predict_H_beamsplitter(const FockVector& psi_a, const FockVector& psi_b, double theta,
                              double psi, PredictorTerms* terms = nullptr);

// Second-order pair-source prediction
//   H = (r^2/2) { 2 A B + A + B + 1 - 2 Re[e^{-2 i psi} Var(a) Var(b)] }.
double predict_H_two_mode_squeezer(const FockVector& psi_a, const FockVector& psi_b, double r,
                                   double psi, PredictorTerms* terms = nullptr);

// General second-order prediction in the device monomials O_a, O_b:
//   2H/r^2 = (<O_a O_a^dag> - |<O_a^dag>|^2)(<O_b^dag O_b> - |<O_b>|^2)
//          + (<O_a^dag O_a> - |<O_a>|^2)(<O_b O_b^dag> - |<O_b>|^2)
//          - 2 Re[e^{-2 i psi} Var(O_a^dag) Var(O_b)].
double predict_H_general(const FockVector& psi_a, const FockVector& psi_b,
                         const GeneralBilinearSpec& device);

// Dispatch on the device variant.
double predict_H(const FockVector& psi_a, const FockVector& psi_b, const DeviceSpec& device,
                 PredictorTerms* terms = nullptr);

// Closed-form extremal values at total mean photon number N:
//   f_max = g_max = (N/2)(N/2 + 1), H_max/theta^2 = N(N/2 + 1).
ExtremalValues extremal_values(double N);

// Evolves the product of the two inputs and compares exact vs predicted H.
EntropyComparison compare_exact_vs_predicted(const FockVector& psi_a, const FockVector& psi_b,
                                             const DeviceSpec& device);

}  // namespace bosonlab

#endif  // BOSONLAB_ENTANGLEMENT_HPP
