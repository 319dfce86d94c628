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

#include "bosonlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "bosonlab/errors.hpp"

namespace bosonlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// <a^dag^m a^m> = <n (n-1) ... (n-m+1)> as a photon-number sum (exact).
double falling_moment(const FockVector& psi, int m) {
  double s = 0.0;
  for (int n = 0; n <= psi.cutoff(); ++n) {
    double p = 1.0;
    for (int i = 0; i < m; ++i) p *= static_cast<double>(n - i);
    s += std::norm(psi.amps[static_cast<std::size_t>(n)]) * p;
  }
  return s;
}

// <a^m a^dag^m> = <(n+1)(n+2) ... (n+m)> as a photon-number sum (exact).
double rising_moment(const FockVector& psi, int m) {
  double s = 0.0;
  for (int n = 0; n <= psi.cutoff(); ++n) {
    double p = 1.0;
    for (int i = 1; i <= m; ++i) p *= static_cast<double>(n + i);
    s += std::norm(psi.amps[static_cast<std::size_t>(n)]) * p;
  }
  return s;
}

InequalityReport make_report(double lhs, double rhs) {
  InequalityReport rep;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.gap = rhs - lhs;
  rep.relative_gap = rep.gap / std::max(rhs, 1e-300);
  rep.saturated = rep.relative_gap < 1e-8;
  return rep;
}

}  // namespace

InequalityReport check_cat_inequality(const FockVector& state, int n) {
  if (n < 1) throw std::invalid_argument("check_cat_inequality: n must be >= 1");
  if (!state.is_normalized()) throw std::invalid_argument("check_cat_inequality: unnormalized");
  const cplx e = expectation(state, MonomialSpec{0, n, 0, 0});
  return make_report(std::norm(e), falling_moment(state, n));
}

InequalityReport check_squeeze_inequality(const FockVector& state, int k, int l) {
  if (k < 1 || l < 0 || k < l) {
    throw std::invalid_argument("check_squeeze_inequality: requires k >= max(l, 1)");
  }
  if (!state.is_normalized()) throw std::invalid_argument("check_squeeze_inequality: unnormalized");
  const cplx e = expectation(state, MonomialSpec{0, k + l, 0, 0});
  return make_report(std::norm(e), falling_moment(state, k) * rising_moment(state, l));
}

namespace {

// a^k psi and a^dag^l psi with the top l levels zeroed in both (the raised
// vector is incomplete there once truncated).
struct GuardedPair {
  FockVector lowered;
  FockVector raised;
};

GuardedPair guarded_ladder_pair(const FockVector& state, int k, int l) {
  GuardedPair gp;
  gp.lowered = apply_ladder(state, Mode::A, LadderKind::Lower, k).first;
  gp.raised = l > 0 ? apply_ladder(state, Mode::A, LadderKind::Raise, l).first : state;
  for (int n = state.cutoff() - l + 1; n <= state.cutoff(); ++n) {
    gp.lowered.amps[static_cast<std::size_t>(n)] = 0.0;
    gp.raised.amps[static_cast<std::size_t>(n)] = 0.0;
  }
  return gp;
}

}  // namespace

double eigen_residual(const FockVector& state, int k, int l, cplx eta) {
  if (k < 1 || l < 0) throw std::invalid_argument("eigen_residual: bad (k, l)");
  if (!state.is_normalized()) throw std::invalid_argument("eigen_residual: unnormalized");
  const GuardedPair gp = guarded_ladder_pair(state, k, l);
  double diff2 = 0.0, lhs2 = 0.0, rhs2 = 0.0;
  for (std::size_t n = 0; n < state.amps.size(); ++n) {
    const cplx d = gp.lowered.amps[n] - eta * gp.raised.amps[n];
    diff2 += std::norm(d);
    lhs2 += std::norm(gp.lowered.amps[n]);
    rhs2 += std::norm(eta * gp.raised.amps[n]);
  }
  const double denom = std::sqrt(std::max(lhs2, rhs2));
  if (denom < 1e-150) return std::sqrt(diff2) < 1e-150 ? 0.0 : 1.0;
  return std::sqrt(diff2) / denom;
}

cplx fit_eta(const FockVector& state, int k, int l) {
  if (k < 1 || l < 0) throw std::invalid_argument("fit_eta: bad (k, l)");
  const GuardedPair gp = guarded_ladder_pair(state, k, l);
  cplx num(0.0, 0.0);
  double den = 0.0;
  for (std::size_t n = 0; n < state.amps.size(); ++n) {
    num += std::conj(gp.raised.amps[n]) * gp.lowered.amps[n];
    den += std::norm(gp.raised.amps[n]);
  }
  if (den < 1e-300) return cplx(0.0, 0.0);
  return num / den;
}

namespace {

// One application of the displacement generator beta a^dag - conj(beta) a.
void displacement_generator_apply(cplx beta, const std::vector<cplx>& x, std::vector<cplx>& y) {
  const std::size_t d = x.size();
  const cplx mbc = -std::conj(beta);
  for (std::size_t n = 0; n < d; ++n) {
    cplx s(0.0, 0.0);
    if (n > 0) s += beta * std::sqrt(static_cast<double>(n)) * x[n - 1];
    if (n + 1 < d) s += mbc * std::sqrt(static_cast<double>(n + 1)) * x[n + 1];
    y[n] = s;
  }
}

// v <- D(beta) v by scaled Taylor application; exact up to 1e-14 tails.
void displace_in_place(cplx beta, std::vector<cplx>& v) {
  if (beta == cplx(0.0, 0.0)) return;
  const double d = static_cast<double>(v.size());
  const double gen_norm = 2.0 * std::abs(beta) * std::sqrt(d);
  const int substeps = std::max(1, static_cast<int>(std::ceil(gen_norm / 2.0)));
  const cplx step_beta = beta / static_cast<double>(substeps);
  std::vector<cplx> term(v.size());
  std::vector<cplx> next(v.size());
  for (int s = 0; s < substeps; ++s) {
    term = v;
    for (int k = 1; k <= 400; ++k) {
      displacement_generator_apply(step_beta, term, next);
      double t_norm = 0.0;
      const double inv = 1.0 / k;
      for (std::size_t i = 0; i < v.size(); ++i) {
        term[i] = next[i] * inv;
        v[i] += term[i];
        t_norm += std::norm(term[i]);
      }
      if (t_norm < 1e-28) break;
    }
  }
}

double parity_sum(const std::vector<cplx>& v) {
  double s = 0.0;
  for (std::size_t n = 0; n < v.size(); ++n) {
    const double w = std::norm(v[n]);
    s += (n % 2 == 0) ? w : -w;
  }
  return s;
}

int working_cutoff(const FockVector& state, double beta_max) {
  const double base = std::pow(std::sqrt(mean_photon_number(state)) + beta_max, 2.0);
  const int enlarged = static_cast<int>(std::ceil(base + 8.0 * std::sqrt(base + 1.0) + 12.0));
  return std::max(enlarged, state.cutoff());
}

}  // namespace

WignerGridSpec default_grid(const FockVector& state, int threads) {
  const double extent = std::sqrt(2.0 * mean_photon_number(state)) + 4.0;
  WignerGridSpec spec;
  spec.x_min = -extent;
  spec.x_max = extent;
  spec.p_min = -extent;
  spec.p_max = extent;
  spec.nx = 201;
  spec.np = 201;
  spec.threads = threads;
  return spec;
}

WignerGrid wigner(const FockVector& state, const WignerGridSpec& spec) {
  if (spec.nx < 1 || spec.np < 1 || !(spec.x_min <= spec.x_max) || !(spec.p_min <= spec.p_max)) {
    throw std::invalid_argument("wigner: invalid grid");
  }
  if (!state.is_normalized()) throw std::invalid_argument("wigner: unnormalized state");

  WignerGrid grid;
  grid.x_values.resize(static_cast<std::size_t>(spec.nx));
  grid.p_values.resize(static_cast<std::size_t>(spec.np));
  for (int i = 0; i < spec.nx; ++i) {
    grid.x_values[static_cast<std::size_t>(i)] =
        spec.nx == 1 ? spec.x_min : spec.x_min + (spec.x_max - spec.x_min) * i / (spec.nx - 1);
  }
  for (int i = 0; i < spec.np; ++i) {
    grid.p_values[static_cast<std::size_t>(i)] =
        spec.np == 1 ? spec.p_min : spec.p_min + (spec.p_max - spec.p_min) * i / (spec.np - 1);
  }
  grid.values.assign(static_cast<std::size_t>(spec.nx) * static_cast<std::size_t>(spec.np), 0.0);

  const double corner = std::sqrt(std::max(spec.x_min * spec.x_min, spec.x_max * spec.x_max) +
                                  std::max(spec.p_min * spec.p_min, spec.p_max * spec.p_max));
  const double beta_max = corner / std::sqrt(2.0);
  const int wd = working_cutoff(state, beta_max) + 1;

  std::vector<cplx> base(static_cast<std::size_t>(wd), cplx(0.0, 0.0));
  std::copy(state.amps.begin(), state.amps.end(), base.begin());

  const double p_step = spec.np > 1 ? (spec.p_max - spec.p_min) / (spec.np - 1) : 0.0;
  // delta between adjacent p columns in displacement amplitude alpha = (x+ip)/sqrt(2)
  const cplx col_delta = cplx(0.0, -p_step / std::sqrt(2.0));

  auto run_rows = [&](int row_begin, int row_end) {
    std::vector<cplx> work;
    for (int ix = row_begin; ix < row_end; ++ix) {
      const double x = grid.x_values[static_cast<std::size_t>(ix)];
      const cplx alpha0(x / std::sqrt(2.0), grid.p_values[0] / std::sqrt(2.0));
      work = base;
      // Full displacement for the first column, then small increments; the
      // composition phase is global and drops out of the parity sum.
      displace_in_place(-alpha0, work);
      for (int ip = 0; ip < spec.np; ++ip) {
        if (ip > 0) displace_in_place(col_delta, work);
        grid.values[static_cast<std::size_t>(ix) * spec.np + ip] = parity_sum(work) / kPi;
      }
    }
  };

  const int threads = std::max(1, spec.threads);
  if (threads == 1 || spec.nx == 1) {
    run_rows(0, spec.nx);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (spec.nx + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const int lo = t * chunk;
      const int hi = std::min(spec.nx, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(run_rows, lo, hi);
    }
    for (std::thread& th : pool) th.join();
  }

  const double required = std::sqrt(2.0 * mean_photon_number(state)) + 3.0;
  grid.coverage_warning = spec.x_max < required || -spec.x_min < required ||
                          spec.p_max < required || -spec.p_min < required;
  return grid;
}

double wigner_point(const FockVector& state, double x, double p) {
  const cplx alpha(x / std::sqrt(2.0), p / std::sqrt(2.0));
  const int wd = working_cutoff(state, std::abs(alpha)) + 1;
  std::vector<cplx> work(static_cast<std::size_t>(wd), cplx(0.0, 0.0));
  std::copy(state.amps.begin(), state.amps.end(), work.begin());
  displace_in_place(-alpha, work);
  return parity_sum(work) / kPi;
}

namespace {

// psi(x) = sum_n c_n h_n(x) with Hermite functions via the stable recurrence
// h_n = x sqrt(2/n) h_{n-1} - sqrt((n-1)/n) h_{n-2}, h_0 = pi^{-1/4} e^{-x^2/2}.
cplx position_wavefunction(const FockVector& state, double x) {
  const double h0 = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  double hm2 = 0.0;
  double hm1 = h0;
  cplx acc = state.amps[0] * h0;
  for (int n = 1; n <= state.cutoff(); ++n) {
    const double hn =
        x * std::sqrt(2.0 / n) * hm1 - std::sqrt(static_cast<double>(n - 1) / n) * hm2;
    acc += state.amps[static_cast<std::size_t>(n)] * hn;
    hm2 = hm1;
    hm1 = hn;
  }
  return acc;
}

}  // namespace

double wigner_point_quadrature(const FockVector& state, double x, double p) {
  if (!state.is_normalized()) throw std::invalid_argument("wigner_point_quadrature: unnormalized");
  const double radius = std::sqrt(2.0 * state.cutoff() + 1.0) + 4.0;
  const double tau_max = 2.0 * (radius + std::abs(x));
  const int npts = 8000;
  const double h = 2.0 * tau_max / npts;
  cplx acc(0.0, 0.0);
  for (int i = 0; i <= npts; ++i) {
    const double tau = -tau_max + i * h;
    const double w = (i == 0 || i == npts) ? 0.5 : 1.0;
    const cplx f = position_wavefunction(state, x + 0.5 * tau) *
                   std::conj(position_wavefunction(state, x - 0.5 * tau)) *
                   std::exp(cplx(0.0, -p * tau));
    acc += w * f;
  }
  return std::real(acc) * h / (2.0 * kPi);
}

FockVector rotated(const FockVector& state, double angle) {
  FockVector out = state;
  for (int n = 0; n <= out.cutoff(); ++n) {
    out.amps[static_cast<std::size_t>(n)] *= std::exp(cplx(0.0, angle * n));
  }
  return out;
}

double symmetry_scan(const FockVector& state, int n, const WignerGridSpec& spec) {
  if (n < 1) throw std::invalid_argument("symmetry_scan: n must be >= 1");
  const WignerGrid w0 = wigner(state, spec);
  const WignerGrid w1 = wigner(rotated(state, 2.0 * kPi / n), spec);
  double worst = 0.0;
  for (std::size_t i = 0; i < w0.values.size(); ++i) {
    worst = std::max(worst, std::abs(w0.values[i] - w1.values[i]));
  }
  return worst;
}

double symmetry_scan(const FockVector& state, int n) {
  return symmetry_scan(state, n, default_grid(state));
}

}  // namespace bosonlab
