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

#ifndef BOSONLAB_FOCK_HPP
#define BOSONLAB_FOCK_HPP

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace bosonlab {

using cplx = std::complex<double>;

enum class Mode { A, B };
enum class LadderKind { Lower, Raise };
enum class VarianceOf { Op, OpDagger };

// Probability weight dropped at the Fock cutoff during an operation.
struct TruncationReport {
  double leaked_weight = 0.0;
  bool flagged = false;

  static constexpr double kFlagTolerance = 1e-10;

  void add(double w) {
    leaked_weight += w;
    flagged = leaked_weight > kFlagTolerance;
  }
  void merge(const TruncationReport& other) { add(other.leaked_weight); }
};

// Single-mode state over photon numbers 0..cutoff.
struct FockVector {
  std::vector<cplx> amps;

  FockVector() = default;
  explicit FockVector(int cutoff) : amps(static_cast<std::size_t>(cutoff) + 1, cplx(0.0, 0.0)) {}

  int cutoff() const { return static_cast<int>(amps.size()) - 1; }
  int dim() const { return static_cast<int>(amps.size()); }

  double squared_norm() const;
  // Scales to unit norm. Throws degenerate_input_error when the norm underflows.
  void normalize();
  bool is_normalized(double tol = 1e-9) const;
};

// Two-mode state, mode-a-major: index = n_a * (cutoff_b + 1) + n_b.
struct TwoModeVector {
  std::vector<cplx> amps;
  int cutoff_a = 0;
  int cutoff_b = 0;

  TwoModeVector() = default;
  TwoModeVector(int ca, int cb)
      : amps(static_cast<std::size_t>(ca + 1) * static_cast<std::size_t>(cb + 1), cplx(0.0, 0.0)),
        cutoff_a(ca),
        cutoff_b(cb) {}

  int dim_a() const { return cutoff_a + 1; }
  int dim_b() const { return cutoff_b + 1; }
  std::size_t size() const { return amps.size(); }
  std::size_t index(int na, int nb) const {
    return static_cast<std::size_t>(na) * static_cast<std::size_t>(cutoff_b + 1) +
           static_cast<std::size_t>(nb);
  }
  cplx& at(int na, int nb) { return amps[index(na, nb)]; }
  const cplx& at(int na, int nb) const { return amps[index(na, nb)]; }

  double squared_norm() const;
  void normalize();
  bool is_normalized(double tol = 1e-9) const;
};

// Powers of the normally ordered monomial a^dag^p a^q b^dag^r b^s.
struct MonomialSpec {
  int p = 0;
  int q = 0;
  int r = 0;
  int s = 0;
};

// Exact ladder action in the truncated space. Raising past the cutoff drops
// the excess amplitude and records its weight. The result is not renormalized.
std::pair<FockVector, TruncationReport> apply_ladder(const FockVector& state, Mode mode,
                                                     LadderKind kind, int power);
std::pair<TwoModeVector, TruncationReport> apply_ladder(const TwoModeVector& state, Mode mode,
                                                        LadderKind kind, int power);

// <state| a^dag^p a^q b^dag^r b^s |state>. Requires r = s = 0 for single-mode
// input. The state must be normalized within 1e-9.
cplx expectation(const FockVector& state, const MonomialSpec& spec);
cplx expectation(const TwoModeVector& state, const MonomialSpec& spec);

// Var(X) = <X^2> - <X>^2 for X in {a, a^dag, b, b^dag}.
cplx variance(const FockVector& state, VarianceOf which);
cplx variance(const TwoModeVector& state, Mode mode, VarianceOf which);

cplx inner_product(const FockVector& x, const FockVector& y);
cplx inner_product(const TwoModeVector& x, const TwoModeVector& y);

TwoModeVector tensor_product(const FockVector& psi_a, const FockVector& psi_b);

// <a^dag a> of an (optionally unnormalized) single-mode vector.
double mean_photon_number(const FockVector& state);

}  // namespace bosonlab

#endif  // BOSONLAB_FOCK_HPP
