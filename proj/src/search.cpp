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

#include "bosonlab/search.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace bosonlab {

namespace {

struct ProductState {
  FockVector a;
  FockVector b;
};

double tilted_energy(const std::vector<double>& probs, double t) {
  double num = 0.0, den = 0.0;
  for (std::size_t m = 0; m < probs.size(); ++m) {
    const double w = probs[m] * std::exp(-t * static_cast<double>(m));
    num += static_cast<double>(m) * w;
    den += w;
  }
  return den > 0.0 ? num / den : 0.0;
}

void apply_tilt(FockVector& v, double t) {
  for (int m = 0; m <= v.cutoff(); ++m) {
    v.amps[static_cast<std::size_t>(m)] *= std::exp(-0.5 * t * static_cast<double>(m));
  }
  v.normalize();
}

void fix_gauge(FockVector& v) {
  for (const cplx& z : v.amps) {
    if (std::abs(z) > 1e-12) {
      const cplx phase = std::conj(z) / std::abs(z);
      for (cplx& w : v.amps) w *= phase;
      return;
    }
  }
}

// Feasibility projection: per-mode normalization, then a joint exponential
// reweighting amps[m] *= e^{-t m / 2} with t chosen by bisection so that
// <n_a> + <n_b> = N (the tilted energy is monotone decreasing in t).
void project(ProductState& s, double N) {
  s.a.normalize();
  s.b.normalize();

  std::vector<double> pa(s.a.amps.size()), pb(s.b.amps.size());
  for (std::size_t i = 0; i < pa.size(); ++i) pa[i] = std::norm(s.a.amps[i]);
  for (std::size_t i = 0; i < pb.size(); ++i) pb[i] = std::norm(s.b.amps[i]);
  auto energy = [&](double t) { return tilted_energy(pa, t) + tilted_energy(pb, t); };

  double lo = -1.0, hi = 1.0;
  for (int i = 0; i < 60 && energy(lo) < N; ++i) lo *= 2.0;
  for (int i = 0; i < 60 && energy(hi) > N; ++i) hi *= 2.0;
  double t = 0.0;
  for (int i = 0; i < 200; ++i) {
    t = 0.5 * (lo + hi);
    const double e = energy(t);
    if (std::abs(e - N) < 1e-13) break;
    if (e > N) {
      lo = t;
    } else {
      hi = t;
    }
  }
  apply_tilt(s.a, t);
  apply_tilt(s.b, t);
  fix_gauge(s.a);
  fix_gauge(s.b);
}

double objective(const ProductState& raw, double N, const DeviceSpec& device) {
  ProductState s = raw;
  project(s, N);
  return predict_H(s.a, s.b, device);
}

SearchResult run_search(const SearchConfig& config, bool maximize) {
  if (config.restarts < 1) throw std::invalid_argument("search: restarts must be >= 1");
  if (config.N < 0.0) throw std::invalid_argument("search: N must be >= 0");
  if (config.cutoff < static_cast<int>(std::ceil(config.N)) + 8) {
    throw std::invalid_argument("search: cutoff must be >= ceil(N) + 8");
  }

  SearchResult best;
  bool have_best = false;

  if (config.N < 1e-12) {
    // Only the vacuum satisfies the constraint.
    ProductState s{FockVector(config.cutoff), FockVector(config.cutoff)};
    s.a.amps[0] = 1.0;
    s.b.amps[0] = 1.0;
    best.best_value = predict_H(s.a, s.b, config.device);
    best.best_state_a = s.a;
    best.best_state_b = s.b;
    best.converged = true;
    return best;
  }

  const double sign = maximize ? 1.0 : -1.0;
  const int dim = config.cutoff + 1;
  const double grad_step = 1e-5;

  for (int restart = 0; restart < config.restarts; ++restart) {
    std::mt19937 rng(config.seed + static_cast<unsigned>(restart) * 7919u);
    std::normal_distribution<double> gauss(0.0, 1.0);

    ProductState s{FockVector(config.cutoff), FockVector(config.cutoff)};
    for (int m = 0; m < dim; ++m) {
      // Bias the random start toward low photon numbers so the energy
      // projection starts near feasibility.
      const double scale = std::exp(-0.25 * m);
      s.a.amps[static_cast<std::size_t>(m)] = scale * cplx(gauss(rng), gauss(rng));
      s.b.amps[static_cast<std::size_t>(m)] = scale * cplx(gauss(rng), gauss(rng));
    }

    double value = objective(s, config.N, config.device);
    double lr = 0.05;
    int iters = 0;
    bool converged = false;

    std::vector<cplx> grad_a(static_cast<std::size_t>(dim));
    std::vector<cplx> grad_b(static_cast<std::size_t>(dim));
    for (; iters < config.max_iters; ++iters) {
      // Central-difference gradient over the raw re/im parameters.
      double grad_norm2 = 0.0;
      for (int mode = 0; mode < 2; ++mode) {
        FockVector& v = mode == 0 ? s.a : s.b;
        std::vector<cplx>& g = mode == 0 ? grad_a : grad_b;
        for (int m = 0; m < dim; ++m) {
          cplx& z = v.amps[static_cast<std::size_t>(m)];
          const cplx z0 = z;
          double comp[2];
          for (int part = 0; part < 2; ++part) {
            const cplx delta = part == 0 ? cplx(grad_step, 0.0) : cplx(0.0, grad_step);
            z = z0 + delta;
            const double fp = objective(s, config.N, config.device);
            z = z0 - delta;
            const double fm = objective(s, config.N, config.device);
            z = z0;
            comp[part] = (fp - fm) / (2.0 * grad_step);
          }
          g[static_cast<std::size_t>(m)] = cplx(comp[0], comp[1]);
          grad_norm2 += comp[0] * comp[0] + comp[1] * comp[1];
        }
      }
      const double grad_norm = std::sqrt(grad_norm2);
      if (lr * grad_norm < config.step_tolerance) {
        converged = true;
        break;
      }

      bool accepted = false;
      for (int tries = 0; tries < 30; ++tries) {
        ProductState cand = s;
        for (int m = 0; m < dim; ++m) {
          cand.a.amps[static_cast<std::size_t>(m)] += sign * lr * grad_a[static_cast<std::size_t>(m)];
          cand.b.amps[static_cast<std::size_t>(m)] += sign * lr * grad_b[static_cast<std::size_t>(m)];
        }
        const double cand_value = objective(cand, config.N, config.device);
        if (sign * (cand_value - value) > 0.0) {
          s = cand;
          value = cand_value;
          lr *= 1.3;
          accepted = true;
          break;
        }
        lr *= 0.5;
        if (lr * grad_norm < config.step_tolerance) break;
      }
      if (!accepted) {
        converged = lr * grad_norm < config.step_tolerance;
        break;
      }
    }

    project(s, config.N);
    const double final_value = predict_H(s.a, s.b, config.device);
    const double violation =
        std::abs(mean_photon_number(s.a) + mean_photon_number(s.b) - config.N);

    const bool better = !have_best || sign * (final_value - best.best_value) > 0.0;
    if (better) {
      best.best_value = final_value;
      best.best_state_a = s.a;
      best.best_state_b = s.b;
      best.constraint_violation = violation;
      best.iterations_used = iters;
      best.converged = converged;
      best.best_restart = restart;
      have_best = true;
    }
  }
  return best;
}

}  // namespace

SearchResult maximize_generated_entropy(const SearchConfig& config) {
  return run_search(config, true);
}

SearchResult minimize_generated_entropy(const SearchConfig& config) {
  return run_search(config, false);
}

}  // namespace bosonlab
