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

#include "bosonlab/entanglement.hpp"

#include <cmath>
#include <stdexcept>

#include "bosonlab/errors.hpp"

namespace bosonlab {

DensityMatrix reduced_density(const TwoModeVector& state, Mode keep) {
  if (!state.is_normalized()) throw std::invalid_argument("reduced_density: unnormalized state");
  DensityMatrix rho;
  rho.dim = keep == Mode::A ? state.dim_a() : state.dim_b();
  rho.data.assign(static_cast<std::size_t>(rho.dim) * rho.dim, cplx(0.0, 0.0));
  if (keep == Mode::A) {
    for (int i = 0; i < state.dim_a(); ++i) {
      for (int j = 0; j < state.dim_a(); ++j) {
        cplx s(0.0, 0.0);
        for (int nb = 0; nb < state.dim_b(); ++nb) {
          s += state.at(i, nb) * std::conj(state.at(j, nb));
        }
        rho.at(i, j) = s;
      }
    }
  } else {
    for (int i = 0; i < state.dim_b(); ++i) {
      for (int j = 0; j < state.dim_b(); ++j) {
        cplx s(0.0, 0.0);
        for (int na = 0; na < state.dim_a(); ++na) {
          s += state.at(na, i) * std::conj(state.at(na, j));
        }
        rho.at(i, j) = s;
      }
    }
  }
  return rho;
}

double purity(const DensityMatrix& rho) {
  // Tr[rho^2] = sum_ij |rho_ij|^2 for Hermitian rho.
  double s = 0.0;
  for (const cplx& z : rho.data) s += std::norm(z);
  return s;
}

double linear_entropy_via(const TwoModeVector& state, Mode keep) {
  return 1.0 - purity(reduced_density(state, keep));
}

double linear_entropy(const TwoModeVector& state) { return linear_entropy_via(state, Mode::A); }

namespace {

struct ModeMoments {
  double n = 0.0;  // <a^dag a>
  cplx e1;         // <a>
  cplx var;        // Var(a)
};

ModeMoments single_mode_moments(const FockVector& psi) {
  ModeMoments m;
  m.n = std::real(expectation(psi, MonomialSpec{1, 1, 0, 0}));
  m.e1 = expectation(psi, MonomialSpec{0, 1, 0, 0});
  const cplx e2 = expectation(psi, MonomialSpec{0, 2, 0, 0});
  m.var = e2 - m.e1 * m.e1;
  return m;
}

void fill_terms(PredictorTerms* terms, const ModeMoments& ma, const ModeMoments& mb, double psi) {
  if (terms == nullptr) return;
  terms->A = ma.n - std::norm(ma.e1);
  terms->B = mb.n - std::norm(mb.e1);
  terms->var_a = ma.var;
  terms->var_a_dag = std::conj(ma.var);
  terms->var_b = mb.var;
  terms->psi = psi;
  terms->f = 0.5 * (terms->A + terms->B) + terms->A * terms->B;
  terms->g = std::abs(std::conj(ma.var) * mb.var);
  terms->Theta = std::arg(mb.var) + std::arg(std::conj(ma.var)) - 2.0 * psi;
  terms->N = ma.n + mb.n;
}

// Moments of the monomial O = a^m (or a^dag^m). The diagonal products
// <a^dag^m a^m> and <a^m a^dag^m> are evaluated as photon-number sums, exact
// in the truncated space (no raising past the cutoff).
struct MonomialMoments {
  cplx eO;     // <O>
  cplx var;    // <O^2> - <O>^2
  double OdO;  // <O^dag O>
  double OOd;  // <O O^dag>
};

MonomialMoments monomial_moments(const FockVector& psi, int m, bool dagger) {
  double falling = 0.0;  // <a^dag^m a^m> = <n (n-1) ... (n-m+1)>
  double rising = 0.0;   // <a^m a^dag^m> = <(n+1)(n+2) ... (n+m)>
  for (int n = 0; n <= psi.cutoff(); ++n) {
    const double w = std::norm(psi.amps[static_cast<std::size_t>(n)]);
    double pf = 1.0, pr = 1.0;
    for (int i = 0; i < m; ++i) pf *= static_cast<double>(n - i);
    for (int i = 1; i <= m; ++i) pr *= static_cast<double>(n + i);
    falling += w * pf;
    rising += w * pr;
  }
  const cplx e_low = expectation(psi, MonomialSpec{0, m, 0, 0});
  const cplx e_low2 = expectation(psi, MonomialSpec{0, 2 * m, 0, 0});

  MonomialMoments mm;
  if (!dagger) {
    mm.eO = e_low;
    mm.var = e_low2 - e_low * e_low;
    mm.OdO = falling;
    mm.OOd = rising;
  } else {
    mm.eO = std::conj(e_low);
    mm.var = std::conj(e_low2 - e_low * e_low);
    mm.OdO = rising;
    mm.OOd = falling;
  }
  return mm;
}

}  // namespace

double predict_H_beamsplitter(const FockVector& psi_a, const FockVector& psi_b, double theta,
                              double psi, PredictorTerms* terms) {
  const ModeMoments ma = single_mode_moments(psi_a);
  const ModeMoments mb = single_mode_moments(psi_b);
  fill_terms(terms, ma, mb, psi);
  const double A = ma.n - std::norm(ma.e1);
  const double B = mb.n - std::norm(mb.e1);
  const double cross = std::real(std::exp(cplx(0.0, -2.0 * psi)) * std::conj(ma.var) * mb.var);
  return theta * theta * (0.5 * (A + B) + A * B - cross);
}

double predict_H_two_mode_squeezer(const FockVector& psi_a, const FockVector& psi_b, double r,
                                   double psi, PredictorTerms* terms) {
  const ModeMoments ma = single_mode_moments(psi_a);
  const ModeMoments mb = single_mode_moments(psi_b);
  fill_terms(terms, ma, mb, psi);
  const double A = ma.n - std::norm(ma.e1);
  const double B = mb.n - std::norm(mb.e1);
  const double cross = std::real(std::exp(cplx(0.0, -2.0 * psi)) * ma.var * mb.var);
  return 0.5 * r * r * (2.0 * A * B + A + B + 1.0 - 2.0 * cross);
}

double predict_H_general(const FockVector& psi_a, const FockVector& psi_b,
                         const GeneralBilinearSpec& device) {
  const MonomialMoments oa = monomial_moments(psi_a, device.m, device.dagger_a);
  const MonomialMoments ob = monomial_moments(psi_b, device.n, false);
  const cplx var_oa_dag = std::conj(oa.var);
  const double cross =
      std::real(std::exp(cplx(0.0, -2.0 * device.psi)) * var_oa_dag * ob.var);
  const double val = (oa.OOd - std::norm(oa.eO)) * (ob.OdO - std::norm(ob.eO)) +
                     (oa.OdO - std::norm(oa.eO)) * (ob.OOd - std::norm(ob.eO)) - 2.0 * cross;
  return 0.5 * device.r * device.r * val;
}

double predict_H(const FockVector& psi_a, const FockVector& psi_b, const DeviceSpec& device,
                 PredictorTerms* terms) {
  if (const auto* bs = std::get_if<BeamSplitterSpec>(&device.variant)) {
    return predict_H_beamsplitter(psi_a, psi_b, bs->theta, bs->psi, terms);
  }
  if (const auto* tm = std::get_if<TwoModeSqueezerSpec>(&device.variant)) {
    return predict_H_two_mode_squeezer(psi_a, psi_b, tm->r, tm->psi, terms);
  }
  const auto& g = std::get<GeneralBilinearSpec>(device.variant);
  if (terms != nullptr) {
    const ModeMoments ma = single_mode_moments(psi_a);
    const ModeMoments mb = single_mode_moments(psi_b);
    fill_terms(terms, ma, mb, g.psi);
  }
  return predict_H_general(psi_a, psi_b, g);
}

ExtremalValues extremal_values(double N) {
  if (N < 0.0) throw std::invalid_argument("extremal_values: N must be >= 0");
  ExtremalValues v;
  v.f_max = 0.5 * N * (0.5 * N + 1.0);
  v.g_max = v.f_max;
  v.h_max_over_theta_sq = N * (0.5 * N + 1.0);
  return v;
}

EntropyComparison compare_exact_vs_predicted(const FockVector& psi_a, const FockVector& psi_b,
                                             const DeviceSpec& device) {
  const TwoModeVector joint = tensor_product(psi_a, psi_b);
  auto [evolved, report] = evolve(joint, device);
  if (report.leaked_weight > 1e-9) {
    throw truncation_error("compare_exact_vs_predicted: truncation deficit above 1e-9");
  }
  EntropyComparison cmp;
  cmp.exact = linear_entropy(evolved);
  cmp.predicted_second_order = predict_H(psi_a, psi_b, device);
  cmp.device_strength = device_strength(device);
  cmp.ratio_exact_over_strength_sq =
      cmp.device_strength != 0.0 ? cmp.exact / (cmp.device_strength * cmp.device_strength) : 0.0;
  return cmp;
}

}  // namespace bosonlab
