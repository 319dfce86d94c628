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

#include "bosonlab/devices.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

#include "bosonlab/errors.hpp"

namespace bosonlab {

namespace {

// sqrt of the product of ladder factors for `steps` raises starting above n:
// sqrt((n+1)(n+2)...(n+steps)).
double raise_coeff(int n, int steps) {
  double p = 1.0;
  for (int i = 1; i <= steps; ++i) p *= static_cast<double>(n + i);
  return std::sqrt(p);
}

// sqrt(n (n-1) ... (n-steps+1)) for `steps` lowers starting at n.
double lower_coeff(int n, int steps) {
  double p = 1.0;
  for (int i = 0; i < steps; ++i) p *= static_cast<double>(n - i);
  return std::sqrt(p);
}

struct TripletBuilder {
  int dim;
  std::map<std::pair<int, int>, cplx> entries;

  explicit TripletBuilder(int d) : dim(d) {}

  void add(int row, int col, cplx v) { entries[{row, col}] += v; }

  SparseMatrix finish() const {
    SparseMatrix K;
    K.dim = dim;
    K.row_start.assign(static_cast<std::size_t>(dim) + 1, 0);
    std::vector<double> col_sum(static_cast<std::size_t>(dim), 0.0);
    for (const auto& [rc, v] : entries) {
      K.row_start[static_cast<std::size_t>(rc.first) + 1]++;
    }
    for (int i = 0; i < dim; ++i) K.row_start[i + 1] += K.row_start[i];
    K.col.resize(entries.size());
    K.val.resize(entries.size());
    std::vector<int> cursor(K.row_start.begin(), K.row_start.end() - 1);
    for (const auto& [rc, v] : entries) {
      const int pos = cursor[static_cast<std::size_t>(rc.first)]++;
      K.col[static_cast<std::size_t>(pos)] = rc.second;
      K.val[static_cast<std::size_t>(pos)] = v;
      col_sum[static_cast<std::size_t>(rc.second)] += std::abs(v);
    }
    K.one_norm = col_sum.empty() ? 0.0 : *std::max_element(col_sum.begin(), col_sum.end());
    return K;
  }
};

// Adds the pair of mutually adjoint terms
//   c * X + conj(-c) ... specifically: c * T + (-conj(c)) * T^dag,
// where T shifts photon numbers by (da, db) with the usual ladder factors.
// Entries whose endpoints fall outside the truncation are dropped from both
// terms symmetrically, so K stays exactly anti-Hermitian.
void add_shift_pair(TripletBuilder& b, int cutoff_a, int cutoff_b, int da, int db, cplx c) {
  const int dim_b = cutoff_b + 1;
  for (int na = 0; na <= cutoff_a; ++na) {
    const int ta = na + da;
    if (ta < 0 || ta > cutoff_a) continue;
    const double fa = da >= 0 ? raise_coeff(na, da) : lower_coeff(na, -da);
    for (int nb = 0; nb <= cutoff_b; ++nb) {
      const int tb = nb + db;
      if (tb < 0 || tb > cutoff_b) continue;
      const double fb = db >= 0 ? raise_coeff(nb, db) : lower_coeff(nb, -db);
      const int src = na * dim_b + nb;
      const int dst = ta * dim_b + tb;
      const cplx v = c * fa * fb;
      b.add(dst, src, v);
      b.add(src, dst, -std::conj(v));
    }
  }
}

}  // namespace

void SparseMatrix::apply(const cplx* x, cplx* y) const {
  for (int i = 0; i < dim; ++i) {
    cplx s(0.0, 0.0);
    for (int p = row_start[static_cast<std::size_t>(i)];
         p < row_start[static_cast<std::size_t>(i) + 1]; ++p) {
      s += val[static_cast<std::size_t>(p)] * x[col[static_cast<std::size_t>(p)]];
    }
    y[i] = s;
  }
}

std::vector<cplx> SparseMatrix::apply(const std::vector<cplx>& x) const {
  std::vector<cplx> y(static_cast<std::size_t>(dim));
  apply(x.data(), y.data());
  return y;
}

double SparseMatrix::anti_hermiticity_defect() const {
  std::map<std::pair<int, int>, cplx> dense;
  for (int i = 0; i < dim; ++i) {
    for (int p = row_start[static_cast<std::size_t>(i)];
         p < row_start[static_cast<std::size_t>(i) + 1]; ++p) {
      const int j = col[static_cast<std::size_t>(p)];
      dense[{i, j}] += val[static_cast<std::size_t>(p)];
      dense[{j, i}] += std::conj(val[static_cast<std::size_t>(p)]);
    }
  }
  double worst = 0.0;
  for (const auto& [rc, v] : dense) worst = std::max(worst, std::abs(v));
  return worst;
}

SparseMatrix build_generator(const DeviceSpec& device, int cutoff_a, int cutoff_b) {
  if (cutoff_a < 0 || cutoff_b < 0) throw std::invalid_argument("build_generator: bad cutoffs");
  const int dim = (cutoff_a + 1) * (cutoff_b + 1);
  TripletBuilder b(dim);

  if (const auto* bs = std::get_if<BeamSplitterSpec>(&device.variant)) {
    // (theta/2)(e^{i psi} a b^dag - e^{-i psi} a^dag b): shift (-1, +1).
    const cplx c = 0.5 * bs->theta * std::exp(cplx(0.0, bs->psi));
    add_shift_pair(b, cutoff_a, cutoff_b, -1, +1, c);
  } else if (const auto* tm = std::get_if<TwoModeSqueezerSpec>(&device.variant)) {
    if (tm->r < 0.0) throw std::invalid_argument("two-mode squeezer: r must be >= 0");
    // (r/2)(e^{-i psi} a b - e^{i psi} a^dag b^dag): shift (-1, -1).
    const cplx c = 0.5 * tm->r * std::exp(cplx(0.0, -tm->psi));
    add_shift_pair(b, cutoff_a, cutoff_b, -1, -1, c);
  } else {
    const auto& g = std::get<GeneralBilinearSpec>(device.variant);
    if (g.m < 1 || g.n < 1) throw std::invalid_argument("general bilinear: m, n must be >= 1");
    if (g.r < 0.0) throw std::invalid_argument("general bilinear: r must be >= 0");
    if (g.m > cutoff_a || g.n > cutoff_b) {
      throw std::invalid_argument("general bilinear: cutoffs must be >= monomial powers");
    }
    // (r/2)(e^{-i psi} O_a^dag O_b - e^{i psi} O_a O_b^dag) with O_a = a^m
    // (a^dag^m when dagger_a) and O_b = b^n. The leading term shifts photons
    // by (+m, -n), or (-m, -n) when dagger_a.
    const cplx c = 0.5 * g.r * std::exp(cplx(0.0, -g.psi));
    const int da = g.dagger_a ? -g.m : +g.m;
    add_shift_pair(b, cutoff_a, cutoff_b, da, -g.n, c);
  }
  return b.finish();
}

std::vector<cplx> expmv(const SparseMatrix& K, const std::vector<cplx>& x) {
  if (static_cast<int>(x.size()) != K.dim) throw std::invalid_argument("expmv: size mismatch");
  double x_norm = 0.0;
  for (const cplx& z : x) x_norm += std::norm(z);
  x_norm = std::sqrt(x_norm);
  if (x_norm == 0.0) return x;

  const int substeps = std::max(1, static_cast<int>(std::ceil(K.one_norm / 2.0)));
  std::vector<cplx> acc = x;
  std::vector<cplx> term(x.size());
  std::vector<cplx> next(x.size());
  for (int s = 0; s < substeps; ++s) {
    term = acc;
    bool converged = false;
    for (int k = 1; k <= 400; ++k) {
      K.apply(term.data(), next.data());
      const double inv = 1.0 / (static_cast<double>(substeps) * k);
      double t_norm = 0.0;
      for (std::size_t i = 0; i < term.size(); ++i) {
        term[i] = next[i] * inv;
        acc[i] += term[i];
        t_norm += std::norm(term[i]);
      }
      if (std::sqrt(t_norm) < 1e-14 * x_norm) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw std::runtime_error("expmv: Taylor series failed to converge");
    }
  }
  return acc;
}

std::pair<TwoModeVector, TruncationReport> evolve(const TwoModeVector& state,
                                                  const DeviceSpec& device) {
  if (!state.is_normalized()) throw std::invalid_argument("evolve: state must be normalized");

  const SparseMatrix K = build_generator(device, state.cutoff_a, state.cutoff_b);
  TwoModeVector out = state;
  out.amps = expmv(K, state.amps);

  if (const auto* bs = std::get_if<BeamSplitterSpec>(&device.variant)) {
    const double chi = bs->psi - bs->phi;
    for (int na = 0; na <= out.cutoff_a; ++na) {
      for (int nb = 0; nb <= out.cutoff_b; ++nb) {
        out.at(na, nb) *= std::exp(cplx(0.0, 0.5 * chi * (na - nb)));
      }
    }
  }

  const double n2 = out.squared_norm();
  const double deficit = std::max(0.0, 1.0 - n2);
  if (deficit > 1e-6) {
    throw truncation_error("evolve: norm loss exceeds 1e-6 (cutoff too small)");
  }
  out.normalize();
  TruncationReport report;
  report.add(deficit);
  return {std::move(out), report};
}

namespace {

// SU(2) matrix enacted by the beam splitter on (a, b) in the Heisenberg
// picture (see the BeamSplitterSpec doc comment).
std::array<cplx, 4> su2_matrix(const BeamSplitterSpec& bs) {
  const double c = std::cos(bs.theta / 2.0);
  const double s = std::sin(bs.theta / 2.0);
  return {std::exp(cplx(0.0, -(bs.phi - bs.psi) / 2.0)) * c,
          -std::exp(cplx(0.0, -(bs.phi + bs.psi) / 2.0)) * s,
          std::exp(cplx(0.0, (bs.phi + bs.psi) / 2.0)) * s,
          std::exp(cplx(0.0, (bs.phi - bs.psi) / 2.0)) * c};
}

}  // namespace

double heisenberg_check(const BeamSplitterSpec& device, int cutoff_a, int cutoff_b) {
  if (cutoff_a < 3 || cutoff_b < 3) throw std::invalid_argument("heisenberg_check: cutoffs >= 3");
  const int dim_b = cutoff_b + 1;
  const int dim = (cutoff_a + 1) * dim_b;
  const int interior_total = std::min(cutoff_a, cutoff_b) - 2;

  DeviceSpec spec{device};
  const SparseMatrix K = build_generator(spec, cutoff_a, cutoff_b);
  SparseMatrix Kneg = K;
  for (cplx& v : Kneg.val) v = -v;
  const double chi = device.psi - device.phi;

  auto apply_U = [&](std::vector<cplx> v) {
    v = expmv(K, v);
    for (int na = 0; na <= cutoff_a; ++na) {
      for (int nb = 0; nb <= cutoff_b; ++nb) {
        v[static_cast<std::size_t>(na * dim_b + nb)] *= std::exp(cplx(0.0, 0.5 * chi * (na - nb)));
      }
    }
    return v;
  };
  auto apply_Udag = [&](std::vector<cplx> v) {
    for (int na = 0; na <= cutoff_a; ++na) {
      for (int nb = 0; nb <= cutoff_b; ++nb) {
        v[static_cast<std::size_t>(na * dim_b + nb)] *= std::exp(cplx(0.0, -0.5 * chi * (na - nb)));
      }
    }
    return expmv(Kneg, v);
  };
  auto apply_mode = [&](const std::vector<cplx>& v, Mode mode) {
    TwoModeVector t(cutoff_a, cutoff_b);
    t.amps = v;
    return apply_ladder(t, mode, LadderKind::Lower, 1).first.amps;
  };

  const auto M = su2_matrix(device);
  double worst = 0.0;
  for (int na = 0; na <= cutoff_a; ++na) {
    for (int nb = 0; nb <= cutoff_b; ++nb) {
      if (na + nb > interior_total) continue;
      std::vector<cplx> e(static_cast<std::size_t>(dim), cplx(0.0, 0.0));
      e[static_cast<std::size_t>(na * dim_b + nb)] = 1.0;
      const auto Ue = apply_U(e);
      const auto a_col = apply_Udag(apply_mode(Ue, Mode::A));
      const auto b_col = apply_Udag(apply_mode(Ue, Mode::B));
      const auto a_ref1 = apply_mode(e, Mode::A);
      const auto b_ref1 = apply_mode(e, Mode::B);
      for (int ma = 0; ma <= cutoff_a; ++ma) {
        for (int mb = 0; mb <= cutoff_b; ++mb) {
          if (ma + mb > interior_total) continue;
          const std::size_t i = static_cast<std::size_t>(ma * dim_b + mb);
          worst = std::max(worst, std::abs(a_col[i] - (M[0] * a_ref1[i] + M[1] * b_ref1[i])));
          worst = std::max(worst, std::abs(b_col[i] - (M[2] * a_ref1[i] + M[3] * b_ref1[i])));
        }
      }
    }
  }
  return worst;
}

double device_strength(const DeviceSpec& device) {
  if (const auto* bs = std::get_if<BeamSplitterSpec>(&device.variant)) return bs->theta;
  if (const auto* tm = std::get_if<TwoModeSqueezerSpec>(&device.variant)) return tm->r;
  return std::get<GeneralBilinearSpec>(device.variant).r;
}

DeviceSpec with_strength(const DeviceSpec& device, double strength) {
  DeviceSpec out = device;
  if (auto* bs = std::get_if<BeamSplitterSpec>(&out.variant)) {
    bs->theta = strength;
  } else if (auto* tm = std::get_if<TwoModeSqueezerSpec>(&out.variant)) {
    tm->r = strength;
  } else {
    std::get<GeneralBilinearSpec>(out.variant).r = strength;
  }
  return out;
}

}  // namespace bosonlab
