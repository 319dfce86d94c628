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

#include "bosonlab/fock.hpp"

#include <cmath>
#include <stdexcept>

#include "bosonlab/errors.hpp"

namespace bosonlab {

namespace {

double squared_norm_of(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const cplx& z : v) s += std::norm(z);
  return s;
}

void normalize_in_place(std::vector<cplx>& v) {
  const double n2 = squared_norm_of(v);
  if (n2 < 1e-24) throw degenerate_input_error("cannot normalize a (near-)zero vector");
  const double inv = 1.0 / std::sqrt(n2);
  for (cplx& z : v) z *= inv;
}

// One lowering step on a contiguous stride pattern: for each block of
// `levels` consecutive indices (stride apart), out[n-1] += sqrt(n) in[n].
void lower_once(std::vector<cplx>& v, int levels, std::size_t stride, std::size_t blocks,
                std::size_t block_step) {
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t base = b * block_step;
    for (int n = 0; n < levels - 1; ++n) {
      v[base + static_cast<std::size_t>(n) * stride] =
          std::sqrt(static_cast<double>(n + 1)) * v[base + static_cast<std::size_t>(n + 1) * stride];
    }
    v[base + static_cast<std::size_t>(levels - 1) * stride] = cplx(0.0, 0.0);
  }
}

// One raising step; the amplitude pushed past the top level is dropped and
// its weight accumulated into `leak`.
void raise_once(std::vector<cplx>& v, int levels, std::size_t stride, std::size_t blocks,
                std::size_t block_step, double& leak) {
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t base = b * block_step;
    const cplx top = v[base + static_cast<std::size_t>(levels - 1) * stride];
    leak += static_cast<double>(levels) * std::norm(top);
    for (int n = levels - 1; n > 0; --n) {
      v[base + static_cast<std::size_t>(n) * stride] =
          std::sqrt(static_cast<double>(n)) * v[base + static_cast<std::size_t>(n - 1) * stride];
    }
    v[base] = cplx(0.0, 0.0);
  }
}

}  // namespace

double FockVector::squared_norm() const { return squared_norm_of(amps); }

void FockVector::normalize() { normalize_in_place(amps); }

bool FockVector::is_normalized(double tol) const {
  return std::abs(squared_norm() - 1.0) <= tol;
}

double TwoModeVector::squared_norm() const { return squared_norm_of(amps); }

void TwoModeVector::normalize() { normalize_in_place(amps); }

bool TwoModeVector::is_normalized(double tol) const {
  return std::abs(squared_norm() - 1.0) <= tol;
}

std::pair<FockVector, TruncationReport> apply_ladder(const FockVector& state, Mode mode,
                                                     LadderKind kind, int power) {
  if (power < 1) throw std::invalid_argument("apply_ladder: power must be >= 1");
  if (mode != Mode::A) throw std::invalid_argument("apply_ladder: single-mode state has no mode b");
  if (state.amps.empty()) throw std::invalid_argument("apply_ladder: empty state");

  FockVector out = state;
  TruncationReport report;
  double leak = 0.0;
  for (int step = 0; step < power; ++step) {
    if (kind == LadderKind::Lower) {
      lower_once(out.amps, out.dim(), 1, 1, 0);
    } else {
      raise_once(out.amps, out.dim(), 1, 1, 0, leak);
    }
  }
  report.add(leak);
  return {std::move(out), report};
}

std::pair<TwoModeVector, TruncationReport> apply_ladder(const TwoModeVector& state, Mode mode,
                                                        LadderKind kind, int power) {
  if (power < 1) throw std::invalid_argument("apply_ladder: power must be >= 1");
  if (state.amps.empty()) throw std::invalid_argument("apply_ladder: empty state");

  TwoModeVector out = state;
  TruncationReport report;
  double leak = 0.0;
  const std::size_t db = static_cast<std::size_t>(state.dim_b());
  const std::size_t da = static_cast<std::size_t>(state.dim_a());
  for (int step = 0; step < power; ++step) {
    if (mode == Mode::A) {
      // Mode a varies with stride dim_b; each nb value is one block.
      if (kind == LadderKind::Lower) {
        lower_once(out.amps, state.dim_a(), db, db, 1);
      } else {
        raise_once(out.amps, state.dim_a(), db, db, 1, leak);
      }
    } else {
      if (kind == LadderKind::Lower) {
        lower_once(out.amps, state.dim_b(), 1, da, db);
      } else {
        raise_once(out.amps, state.dim_b(), 1, da, db, leak);
      }
    }
  }
  report.add(leak);
  return {std::move(out), report};
}

namespace {

void require_normalized(double n2) {
  if (std::abs(n2 - 1.0) > 1e-9) {
    throw std::invalid_argument("expectation: state is not normalized within 1e-9");
  }
}

}  // namespace

cplx expectation(const FockVector& state, const MonomialSpec& spec) {
  if (spec.r != 0 || spec.s != 0) {
    throw std::invalid_argument("expectation: single-mode state has no mode b");
  }
  require_normalized(state.squared_norm());
  // <psi| a^dag^p a^q |psi> = <a^p psi, a^q psi>.
  FockVector left = state;
  for (int i = 0; i < spec.p; ++i) left = apply_ladder(left, Mode::A, LadderKind::Lower, 1).first;
  FockVector right = state;
  for (int i = 0; i < spec.q; ++i) right = apply_ladder(right, Mode::A, LadderKind::Lower, 1).first;
  return inner_product(left, right);
}

cplx expectation(const TwoModeVector& state, const MonomialSpec& spec) {
  require_normalized(state.squared_norm());
  TwoModeVector left = state;
  for (int i = 0; i < spec.p; ++i) left = apply_ladder(left, Mode::A, LadderKind::Lower, 1).first;
  for (int i = 0; i < spec.r; ++i) left = apply_ladder(left, Mode::B, LadderKind::Lower, 1).first;
  TwoModeVector right = state;
  for (int i = 0; i < spec.q; ++i) right = apply_ladder(right, Mode::A, LadderKind::Lower, 1).first;
  for (int i = 0; i < spec.s; ++i) right = apply_ladder(right, Mode::B, LadderKind::Lower, 1).first;
  return inner_product(left, right);
}

namespace {

cplx variance_of_lowering(cplx e1, cplx e2, VarianceOf which) {
  const cplx var = e2 - e1 * e1;
  return which == VarianceOf::Op ? var : std::conj(var);
}

}  // namespace

cplx variance(const FockVector& state, VarianceOf which) {
  const cplx e1 = expectation(state, MonomialSpec{0, 1, 0, 0});
  const cplx e2 = expectation(state, MonomialSpec{0, 2, 0, 0});
  return variance_of_lowering(e1, e2, which);
}

cplx variance(const TwoModeVector& state, Mode mode, VarianceOf which) {
  MonomialSpec one, two;
  if (mode == Mode::A) {
    one = MonomialSpec{0, 1, 0, 0};
    two = MonomialSpec{0, 2, 0, 0};
  } else {
    one = MonomialSpec{0, 0, 0, 1};
    two = MonomialSpec{0, 0, 0, 2};
  }
  return variance_of_lowering(expectation(state, one), expectation(state, two), which);
}

cplx inner_product(const FockVector& x, const FockVector& y) {
  if (x.amps.size() != y.amps.size()) {
    throw std::invalid_argument("inner_product: dimension mismatch");
  }
  cplx s(0.0, 0.0);
  for (std::size_t i = 0; i < x.amps.size(); ++i) s += std::conj(x.amps[i]) * y.amps[i];
  return s;
}

cplx inner_product(const TwoModeVector& x, const TwoModeVector& y) {
  if (x.amps.size() != y.amps.size() || x.cutoff_a != y.cutoff_a || x.cutoff_b != y.cutoff_b) {
    throw std::invalid_argument("inner_product: shape mismatch");
  }
  cplx s(0.0, 0.0);
  for (std::size_t i = 0; i < x.amps.size(); ++i) s += std::conj(x.amps[i]) * y.amps[i];
  return s;
}

TwoModeVector tensor_product(const FockVector& psi_a, const FockVector& psi_b) {
  if (!psi_a.is_normalized() || !psi_b.is_normalized()) {
    throw std::invalid_argument("tensor_product: inputs must be normalized");
  }
  TwoModeVector out(psi_a.cutoff(), psi_b.cutoff());
  for (int na = 0; na <= psi_a.cutoff(); ++na) {
    for (int nb = 0; nb <= psi_b.cutoff(); ++nb) {
      out.at(na, nb) = psi_a.amps[static_cast<std::size_t>(na)] *
                       psi_b.amps[static_cast<std::size_t>(nb)];
    }
  }
  return out;
}

double mean_photon_number(const FockVector& state) {
  double s = 0.0;
  for (int n = 0; n <= state.cutoff(); ++n) {
    s += n * std::norm(state.amps[static_cast<std::size_t>(n)]);
  }
  return s;
}

}  // namespace bosonlab
