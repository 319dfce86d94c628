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

#include "bosonlab/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bosonlab/errors.hpp"

namespace bosonlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

void validate_generalized_kl(int k, int l, cplx eta, int seed) {
  if (k < 1) throw std::invalid_argument("generalized state: k must be >= 1");
  if (l < 0) throw std::invalid_argument("generalized state: l must be >= 0");
  if (k < l) throw std::invalid_argument("generalized state: requires k >= l");
  if (k == l && std::abs(eta) > 1.0) {
    throw divergent_series_error("generalized state: k = l requires |eta| <= 1");
  }
  const int seed_max = std::max(l, 1) - 1;
  if (seed < 0 || seed > seed_max) {
    throw std::invalid_argument("generalized state: seed out of range [0, max(l,1)-1]");
  }
}

// Log-magnitude increment of the recursion step Psi_{j+n} = eta * Psi_j *
// (j+l)! / sqrt(j! (j+n)!), excluding ln|eta|.
double recursion_log_step(int j, int l, int n) {
  return std::lgamma(static_cast<double>(j + l + 1)) -
         0.5 * (std::lgamma(static_cast<double>(j + 1)) +
                std::lgamma(static_cast<double>(j + n + 1)));
}

}  // namespace

int default_cutoff(double mean_n) {
  return static_cast<int>(std::ceil(mean_n + 8.0 * std::sqrt(mean_n + 1.0) + 10.0));
}

FockVector make_coherent(cplx alpha, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("make_coherent: cutoff must be >= 0");
  FockVector out(cutoff);
  const double mag = std::abs(alpha);
  if (mag == 0.0) {
    out.amps[0] = 1.0;
    return out;
  }
  const double log_mag = std::log(mag);
  const double arg = std::arg(alpha);
  double total = 0.0;
  for (int n = 0; n <= cutoff; ++n) {
    const double lm = -0.5 * mag * mag + n * log_mag - 0.5 * std::lgamma(n + 1.0);
    const cplx amp = std::exp(cplx(lm, n * arg));
    out.amps[static_cast<std::size_t>(n)] = amp;
    total += std::norm(amp);
  }
  if (1.0 - total > 1e-10) {
    throw truncation_error("make_coherent: cutoff too small (leaked weight > 1e-10)");
  }
  out.normalize();
  return out;
}

FockVector make_fock(int n, int cutoff) {
  if (n < 0) throw std::invalid_argument("make_fock: n must be >= 0");
  if (cutoff < n) throw std::invalid_argument("make_fock: cutoff must be >= n");
  FockVector out(cutoff);
  out.amps[static_cast<std::size_t>(n)] = 1.0;
  return out;
}

FockVector make_squeezed_vacuum(double r, double phi, int cutoff) {
  if (r < 0.0) throw std::invalid_argument("make_squeezed_vacuum: r must be >= 0");
  if (cutoff < 0) throw std::invalid_argument("make_squeezed_vacuum: cutoff must be >= 0");
  FockVector out(cutoff);
  if (r == 0.0) {
    out.amps[0] = 1.0;
    return out;
  }
  // c_{2m} = (-e^{i phi} tanh r)^m sqrt((2m)!) / (2^m m! sqrt(cosh r)).
  const double log_tanh = std::log(std::tanh(r));
  const double log_cosh_half = 0.5 * std::log(std::cosh(r));
  double total = 0.0;
  for (int m = 0; 2 * m <= cutoff; ++m) {
    const double lm = 0.5 * std::lgamma(2.0 * m + 1.0) - m * std::log(2.0) -
                      std::lgamma(m + 1.0) + m * log_tanh - log_cosh_half;
    const double phase = m * (phi + kPi);
    const cplx amp = std::exp(cplx(lm, phase));
    out.amps[static_cast<std::size_t>(2 * m)] = amp;
    total += std::norm(amp);
  }
  if (1.0 - total > 1e-8) {
    throw truncation_error("make_squeezed_vacuum: cutoff too small (leaked weight > 1e-8)");
  }
  out.normalize();
  return out;
}

FockVector make_higher_cat(cplx alpha, int n, const std::vector<double>& relative_phases,
                           int cutoff) {
  if (n < 1) throw std::invalid_argument("make_higher_cat: n must be >= 1");
  if (static_cast<int>(relative_phases.size()) != n) {
    throw std::invalid_argument("make_higher_cat: relative_phases must have n entries");
  }
  if (cutoff < 0) throw std::invalid_argument("make_higher_cat: cutoff must be >= 0");

  // Exact squared norm from the coherent-overlap Gram matrix, immune to the
  // catastrophic cancellation that hits the truncated amplitude sum at small
  // |alpha|.
  const double mag2 = std::norm(alpha);
  double gram = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int kk = 0; kk < n; ++kk) {
      const cplx aj = alpha * std::exp(cplx(0.0, 2.0 * kPi * j / n));
      const cplx ak = alpha * std::exp(cplx(0.0, 2.0 * kPi * kk / n));
      const cplx overlap = std::exp(-mag2 + std::conj(aj) * ak);
      const cplx phase = std::exp(cplx(0.0, relative_phases[kk] - relative_phases[j]));
      gram += std::real(phase * overlap);
    }
  }
  if (gram < 1e-12) {
    throw degenerate_input_error("make_higher_cat: superposition norm underflows");
  }

  FockVector out(cutoff);
  double total = 0.0;
  for (int m = 0; m <= cutoff; ++m) {
    cplx amp(0.0, 0.0);
    for (int kk = 0; kk < n; ++kk) {
      const cplx ak = alpha * std::exp(cplx(0.0, 2.0 * kPi * kk / n));
      cplx branch;
      if (std::abs(ak) == 0.0) {
        branch = (m == 0) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
      } else {
        branch = std::exp(cplx(-0.5 * mag2 + m * std::log(std::abs(ak)) -
                                   0.5 * std::lgamma(m + 1.0),
                               m * std::arg(ak)));
      }
      amp += std::exp(cplx(0.0, relative_phases[kk])) * branch;
    }
    out.amps[static_cast<std::size_t>(m)] = amp;
    total += std::norm(amp);
  }
  if (std::abs(gram - total) / gram > 1e-8) {
    throw truncation_error("make_higher_cat: cutoff too small for this amplitude");
  }
  const double inv = 1.0 / std::sqrt(gram);
  for (cplx& z : out.amps) z *= inv;
  out.normalize();
  return out;
}

FockVector make_generalized_kl(int k, int l, cplx eta, int seed, int cutoff) {
  validate_generalized_kl(k, l, eta, seed);
  if (cutoff < seed) throw std::invalid_argument("make_generalized_kl: cutoff must be >= seed");

  FockVector out(cutoff);
  const double eta_mag = std::abs(eta);
  if (eta_mag == 0.0) {
    out.amps[static_cast<std::size_t>(seed)] = 1.0;
    return out;
  }
  const int n = k + l;
  const double log_eta = std::log(eta_mag);
  const double arg_eta = std::arg(eta);

  // Run the recursion in log-magnitude + phase form; amplitudes are exponated
  // relative to the running maximum to dodge overflow of the factorials.
  std::vector<double> log_mag;
  std::vector<double> phase;
  double cur_log = 0.0;
  double cur_phase = 0.0;
  double max_log = 0.0;
  for (int j = seed; j <= cutoff; j += n) {
    log_mag.push_back(cur_log);
    phase.push_back(cur_phase);
    max_log = std::max(max_log, cur_log);
    cur_log += log_eta + recursion_log_step(j, l, n);
    cur_phase += arg_eta;
  }

  double kept = 0.0;
  for (std::size_t i = 0; i < log_mag.size(); ++i) {
    const int j = seed + static_cast<int>(i) * n;
    const cplx amp = std::exp(cplx(log_mag[i] - max_log, phase[i]));
    out.amps[static_cast<std::size_t>(j)] = amp;
    kept += std::norm(amp);
  }

  // Tail estimate: continue the recursion past the cutoff until the added
  // weight is negligible (or give up and flag gross truncation).
  double tail = 0.0;
  {
    double tl = cur_log;
    int j = seed + static_cast<int>(log_mag.size()) * n;
    for (int extra = 0; extra < 200; ++extra) {
      const double w = std::exp(2.0 * (tl - max_log));
      tail += w;
      if (w < 1e-16 * kept) break;
      tl += log_eta + recursion_log_step(j, l, n);
      j += n;
    }
  }
  if (tail / (kept + tail) > 1e-8) {
    throw truncation_error("make_generalized_kl: cutoff leakage > 1e-8");
  }
  out.normalize();
  return out;
}

FockVector make_generalized_kl_closed_form(int k, int l, cplx eta, int cutoff) {
  validate_generalized_kl(k, l, eta, 0);
  FockVector out(cutoff);
  const double eta_mag = std::abs(eta);
  if (eta_mag == 0.0) {
    out.amps[0] = 1.0;
    return out;
  }
  const int n = k + l;
  const double log_eta = std::log(eta_mag);
  const double arg_eta = std::arg(eta);

  // Psi_{j n} = eta^j sqrt((j n)!) prod_{i=0}^{j-1} (i n + l)! / (i n + n)!.
  std::vector<double> log_mag;
  std::vector<double> phase;
  double prod_log = 0.0;  // running sum over i of lgamma(in+l+1) - lgamma(in+n+1)
  double max_log = -1e300;
  for (int j = 0; j * n <= cutoff; ++j) {
    const double lm = j * log_eta + 0.5 * std::lgamma(static_cast<double>(j) * n + 1.0) + prod_log;
    log_mag.push_back(lm);
    phase.push_back(j * arg_eta);
    max_log = std::max(max_log, lm);
    prod_log += std::lgamma(static_cast<double>(j) * n + l + 1.0) -
                std::lgamma(static_cast<double>(j) * n + n + 1.0);
  }
  for (std::size_t i = 0; i < log_mag.size(); ++i) {
    out.amps[static_cast<std::size_t>(i) * static_cast<std::size_t>(n)] =
        std::exp(cplx(log_mag[i] - max_log, phase[i]));
  }
  out.normalize();
  return out;
}

namespace {

int squeezed_cutoff(double r) {
  const int base = default_cutoff(std::sinh(r) * std::sinh(r));
  if (r <= 1e-12) return base;
  // Geometric tail |c_{2m}|^2 ~ tanh(r)^{2m}: push the cutoff far enough
  // that the dropped weight is far below the 1e-8 construction gate.
  const double log_t = std::log(std::tanh(r));
  const int m0 = static_cast<int>(std::ceil(std::log(1e-12) / (2.0 * log_t))) + 4;
  return std::max(base, 2 * m0);
}

int generalized_cutoff(int k, int l, cplx eta, int seed) {
  validate_generalized_kl(k, l, eta, seed);
  const double eta_mag = std::abs(eta);
  if (eta_mag == 0.0) return std::max(seed + 2, 16);
  const int n = k + l;
  const double log_eta = std::log(eta_mag);
  double cur = 0.0;
  double max_log = 0.0;
  int j = seed;
  const int cap = 4000;
  while (j < cap) {
    if (cur < max_log - 23.0) break;  // weight ratio below ~1e-20
    cur += log_eta + recursion_log_step(j, l, n);
    j += n;
    max_log = std::max(max_log, cur);
  }
  return std::max(j + n, 16);
}

}  // namespace

int resolve_cutoff(const StateSpec& spec) {
  if (spec.cutoff >= 0) return spec.cutoff;
  if (const auto* c = std::get_if<CoherentSpec>(&spec.variant)) {
    return default_cutoff(std::norm(c->alpha));
  }
  if (const auto* f = std::get_if<FockSpec>(&spec.variant)) {
    return default_cutoff(static_cast<double>(f->n));
  }
  if (const auto* s = std::get_if<SqueezedVacuumSpec>(&spec.variant)) {
    return squeezed_cutoff(s->r);
  }
  if (const auto* h = std::get_if<HigherCatSpec>(&spec.variant)) {
    return default_cutoff(std::norm(h->alpha));
  }
  const auto& g = std::get<GeneralizedKLSpec>(spec.variant);
  return generalized_cutoff(g.k, g.l, g.eta, g.seed);
}

FockVector make_state(const StateSpec& spec) {
  const int cutoff = resolve_cutoff(spec);
  if (const auto* c = std::get_if<CoherentSpec>(&spec.variant)) {
    return make_coherent(c->alpha, cutoff);
  }
  if (const auto* f = std::get_if<FockSpec>(&spec.variant)) {
    return make_fock(f->n, cutoff);
  }
  if (const auto* s = std::get_if<SqueezedVacuumSpec>(&spec.variant)) {
    return make_squeezed_vacuum(s->r, s->phi, cutoff);
  }
  if (const auto* h = std::get_if<HigherCatSpec>(&spec.variant)) {
    return make_higher_cat(h->alpha, h->n, h->relative_phases, cutoff);
  }
  const auto& g = std::get<GeneralizedKLSpec>(spec.variant);
  return make_generalized_kl(g.k, g.l, g.eta, g.seed, cutoff);
}

}  // namespace bosonlab
