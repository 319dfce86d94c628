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

#ifndef BOSONLAB_ANALYSIS_HPP
#define BOSONLAB_ANALYSIS_HPP

#include <vector>

#include "bosonlab/fock.hpp"

namespace bosonlab {

struct InequalityReport {
  double lhs = 0.0;           // |<a^n>|^2
  double rhs = 0.0;           // bound value
  double gap = 0.0;           // rhs - lhs, >= 0 up to numerical floor
  double relative_gap = 0.0;  // gap / max(rhs, tiny)
  bool saturated = false;     // relative_gap < 1e-8
};

// |<a^n>|^2 <= <a^dag^n a^n>.
InequalityReport check_cat_inequality(const FockVector& state, int n);

// |<a^{k+l}>|^2 <= <a^dag^k a^k> <a^l a^dag^l>, k >= l.
InequalityReport check_squeeze_inequality(const FockVector& state, int k, int l);

// || a^k psi - eta a^dag^l psi || / max(||a^k psi||, ||eta a^dag^l psi||),
// with the top l Fock levels excluded from all norms (truncation guard).
double eigen_residual(const FockVector& state, int k, int l, cplx eta);

// Least-squares eta minimizing the residual above:
// <a^dag^l psi, a^k psi> / ||a^dag^l psi||^2 over the guarded range.
cplx fit_eta(const FockVector& state, int k, int l);

struct WignerGridSpec {
  double x_min = -6.0;
  double x_max = 6.0;
  int nx = 201;
  double p_min = -6.0;
  double p_max = 6.0;
  int np = 201;
  int threads = 1;
};

struct WignerGrid {
  std::vector<double> x_values;
  std::vector<double> p_values;
  std::vector<double> values;  // row-major: values[ix * np + ip]
  bool coverage_warning = false;

  double at(int ix, int ip) const {
    return values[static_cast<std::size_t>(ix) * p_values.size() + static_cast<std::size_t>(ip)];
  }
};

// Default square grid sized from the state's mean photon number.
WignerGridSpec default_grid(const FockVector& state, int threads = 1);

// Displaced-parity Wigner function on the grid (quadrature units [x,p]=i,
// alpha = (x + i p)/sqrt(2)).
WignerGrid wigner(const FockVector& state, const WignerGridSpec& spec);

// Single displaced-parity point.
double wigner_point(const FockVector& state, double x, double p);

// Independent cross-check: the quadrature-wavefunction autocorrelation
// integral W = (1/2 pi) Int dtau e^{-i p tau} psi(x+tau/2) psi*(x-tau/2).
double wigner_point_quadrature(const FockVector& state, double x, double p);

// Phase-space rotation: amps[n] *= e^{i n angle}.
FockVector rotated(const FockVector& state, double angle);

// Max over the grid of |W_rotated - W| for a rotation by 2 pi / n, with the
// rotation applied exactly in Fock space.
double symmetry_scan(const FockVector& state, int n, const WignerGridSpec& spec);
double symmetry_scan(const FockVector& state, int n);

}  // namespace bosonlab

#endif  // BOSONLAB_ANALYSIS_HPP
