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

#include "bosonlab.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "bosonlab/analysis.hpp"
#include "bosonlab/devices.hpp"
#include "bosonlab/entanglement.hpp"
#include "bosonlab/errors.hpp"
#include "bosonlab/fock.hpp"
#include "bosonlab/json_io.hpp"
#include "bosonlab/search.hpp"
#include "bosonlab/states.hpp"

struct bl_state {
  bosonlab::FockVector v;
};

struct bl_twomode {
  bosonlab::TwoModeVector v;
};

namespace {

thread_local std::string g_last_error = "no error";

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename Fn>
bl_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const bosonlab::truncation_error& e) {
    set_error(e.what());
    return BL_ERR_TRUNCATION;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return BL_ERR_INVALID;
  } catch (const bosonlab::degenerate_input_error& e) {
    set_error(e.what());
    return BL_ERR_INVALID;
  } catch (const nlohmann::json::exception& e) {
    set_error(e.what());
    return BL_ERR_INVALID;
  } catch (const std::exception& e) {
    set_error(e.what());
    return BL_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return BL_ERR_INTERNAL;
  }
}

bl_status require(bool ok, const char* msg) {
  if (!ok) {
    set_error(msg);
    return BL_ERR_INVALID;
  }
  return BL_OK;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void fill_inequality(const bosonlab::InequalityReport& rep, double out[5]) {
  out[0] = rep.lhs;
  out[1] = rep.rhs;
  out[2] = rep.gap;
  out[3] = rep.relative_gap;
  out[4] = rep.saturated ? 1.0 : 0.0;
}

}  // namespace

extern "C" {

const char* bl_last_error(void) { return g_last_error.c_str(); }

void bl_state_free(bl_state* s) { delete s; }
void bl_twomode_free(bl_twomode* s) { delete s; }
void bl_string_free(char* s) { delete[] s; }

bl_status bl_state_from_json(const char* json_text, bl_state** out) {
  if (bl_status st = require(json_text && out, "null argument"); st != BL_OK) return st;
  return guarded([&] {
    const auto parsed = nlohmann::json::parse(json_text);
    if (parsed.is_array()) {
      // Raw amplitude array, as produced by bl_state_to_json.
      auto v = bosonlab::fock_vector_from_json(parsed);
      v.normalize();
      *out = new bl_state{std::move(v)};
      return BL_OK;
    }
    const auto spec = bosonlab::state_spec_from_json(parsed);
    *out = new bl_state{bosonlab::make_state(spec)};
    return BL_OK;
  });
}

bl_status bl_state_from_amplitudes(const double* re_im, int dim, bl_state** out) {
  if (bl_status st = require(re_im && out && dim >= 1, "need re_im, out, dim >= 1"); st != BL_OK) {
    return st;
  }
  return guarded([&] {
    bosonlab::FockVector v(dim - 1);
    for (int i = 0; i < dim; ++i) {
      v.amps[static_cast<std::size_t>(i)] = bosonlab::cplx(re_im[2 * i], re_im[2 * i + 1]);
    }
    v.normalize();
    *out = new bl_state{std::move(v)};
    return BL_OK;
  });
}

int bl_state_dim(const bl_state* s) { return s ? s->v.dim() : 0; }

bl_status bl_state_amplitudes(const bl_state* s, double* re_im_out) {
  if (bl_status st = require(s && re_im_out, "null argument"); st != BL_OK) return st;
  for (int i = 0; i < s->v.dim(); ++i) {
    re_im_out[2 * i] = s->v.amps[static_cast<std::size_t>(i)].real();
    re_im_out[2 * i + 1] = s->v.amps[static_cast<std::size_t>(i)].imag();
  }
  return BL_OK;
}

bl_status bl_state_mean_photon(const bl_state* s, double* out) {
  if (bl_status st = require(s && out, "null argument"); st != BL_OK) return st;
  *out = bosonlab::mean_photon_number(s->v);
  return BL_OK;
}

bl_status bl_state_to_json(const bl_state* s, char** json_out) {
  if (bl_status st = require(s && json_out, "null argument"); st != BL_OK) return st;
  return guarded([&] {
    *json_out = dup_string(bosonlab::fock_vector_to_json(s->v).dump());
    return BL_OK;
  });
}

bl_status bl_tensor(const bl_state* a, const bl_state* b, bl_twomode** out) {
  if (bl_status st = require(a && b && out, "null argument"); st != BL_OK) return st;
  return guarded([&] {
    *out = new bl_twomode{bosonlab::tensor_product(a->v, b->v)};
    return BL_OK;
  });
}

int bl_twomode_dim_a(const bl_twomode* s) { return s ? s->v.dim_a() : 0; }
int bl_twomode_dim_b(const bl_twomode* s) { return s ? s->v.dim_b() : 0; }

bl_status bl_twomode_amplitudes(const bl_twomode* s, double* re_im_out) {
  if (bl_status st = require(s && re_im_out, "null argument"); st != BL_OK) return st;
  for (std::size_t i = 0; i < s->v.amps.size(); ++i) {
    re_im_out[2 * i] = s->v.amps[i].real();
    re_im_out[2 * i + 1] = s->v.amps[i].imag();
  }
  return BL_OK;
}

bl_status bl_evolve(const bl_twomode* in, const char* device_json, bl_twomode** out,
                    double* leaked_weight) {
  if (bl_status st = require(in && device_json && out, "null argument"); st != BL_OK) return st;
  return guarded([&] {
    const auto device = bosonlab::device_spec_from_json(nlohmann::json::parse(device_json));
    auto [evolved, report] = bosonlab::evolve(in->v, device);
    *out = new bl_twomode{std::move(evolved)};
    if (leaked_weight) *leaked_weight = report.leaked_weight;
    return BL_OK;
  });
}

bl_status bl_heisenberg_check(const char* device_json, int cutoff_a, int cutoff_b, double* out) {
  if (bl_status st = require(device_json && out, "null argument"); st != BL_OK) return st;
  return guarded([&] {
    const auto device = bosonlab::device_spec_from_json(nlohmann::json::parse(device_json));
    const auto* bs = std::get_if<bosonlab::BeamSplitterSpec>(&device.variant);
    if (!bs) throw std::invalid_argument("heisenberg check requires a beam_splitter device");
    *out = bosonlab::heisenberg_check(*bs, cutoff_a, cutoff_b);
    return BL_OK;
  });
}

bl_status bl_linear_entropy(const bl_twomode* s, double* out) {
  if (bl_status st = require(s && out, "null argument"); st != BL_OK) return st;
  return guarded([&] {
    *out = bosonlab::linear_entropy(s->v);
    return BL_OK;
  });
}

bl_status bl_predict_entropy(const bl_state* a, const bl_state* b, const char* device_json,
                             double* out) {
  if (bl_status st = require(a && b && device_json && out, "null argument"); st != BL_OK) return st;
  return guarded([&] {
    const auto device = bosonlab::device_spec_from_json(nlohmann::json::parse(device_json));
    *out = bosonlab::predict_H(a->v, b->v, device);
    return BL_OK;
  });
}

bl_status bl_extremal_values(double N, double* f_max, double* g_max,
                             double* h_max_over_theta_sq) {
  return guarded([&] {
    const auto v = bosonlab::extremal_values(N);
    if (f_max) *f_max = v.f_max;
    if (g_max) *g_max = v.g_max;
    if (h_max_over_theta_sq) *h_max_over_theta_sq = v.h_max_over_theta_sq;
    return BL_OK;
  });
}

bl_status bl_check_cat_inequality(const bl_state* s, int n, double out[5]) {
  if (bl_status st = require(s && out, "null argument"); st != BL_OK) return st;
  return guarded([&] {
    fill_inequality(bosonlab::check_cat_inequality(s->v, n), out);
    return BL_OK;
  });
}

bl_status bl_check_squeeze_inequality(const bl_state* s, int k, int l, double out[5]) {
  if (bl_status st = require(s && out, "null argument"); st != BL_OK) return st;
  return guarded([&] {
    fill_inequality(bosonlab::check_squeeze_inequality(s->v, k, l), out);
    return BL_OK;
  });
}

bl_status bl_eigen_residual(const bl_state* s, int k, int l, double eta_re, double eta_im,
                            double* out) {
  if (bl_status st = require(s && out, "null argument"); st != BL_OK) return st;
  return guarded([&] {
    *out = bosonlab::eigen_residual(s->v, k, l, bosonlab::cplx(eta_re, eta_im));
    return BL_OK;
  });
}

bl_status bl_fit_eta(const bl_state* s, int k, int l, double* eta_re, double* eta_im) {
  if (bl_status st = require(s && eta_re && eta_im, "null argument"); st != BL_OK) return st;
  return guarded([&] {
    const bosonlab::cplx eta = bosonlab::fit_eta(s->v, k, l);
    *eta_re = eta.real();
    *eta_im = eta.imag();
    return BL_OK;
  });
}

bl_status bl_wigner(const bl_state* s, double x_min, double x_max, int nx, double p_min,
                    double p_max, int np, int threads, double* values_out,
                    int* coverage_warning) {
  if (bl_status st = require(s && values_out, "null argument"); st != BL_OK) return st;
  return guarded([&] {
    bosonlab::WignerGridSpec spec;
    spec.x_min = x_min;
    spec.x_max = x_max;
    spec.nx = nx;
    spec.p_min = p_min;
    spec.p_max = p_max;
    spec.np = np;
    spec.threads = threads;
    const auto grid = bosonlab::wigner(s->v, spec);
    std::memcpy(values_out, grid.values.data(), grid.values.size() * sizeof(double));
    if (coverage_warning) *coverage_warning = grid.coverage_warning ? 1 : 0;
    return BL_OK;
  });
}

bl_status bl_wigner_point(const bl_state* s, double x, double p, double* out) {
  if (bl_status st = require(s && out, "null argument"); st != BL_OK) return st;
  return guarded([&] {
    *out = bosonlab::wigner_point(s->v, x, p);
    return BL_OK;
  });
}

bl_status bl_wigner_point_quadrature(const bl_state* s, double x, double p, double* out) {
  if (bl_status st = require(s && out, "null argument"); st != BL_OK) return st;
  return guarded([&] {
    *out = bosonlab::wigner_point_quadrature(s->v, x, p);
    return BL_OK;
  });
}

bl_status bl_symmetry_scan(const bl_state* s, int n, double* out) {
  if (bl_status st = require(s && out, "null argument"); st != BL_OK) return st;
  return guarded([&] {
    *out = bosonlab::symmetry_scan(s->v, n);
    return BL_OK;
  });
}

bl_status bl_search(const char* config_json, int maximize, char** result_json) {
  if (bl_status st = require(config_json && result_json, "null argument"); st != BL_OK) return st;
  return guarded([&] {
    const auto config = bosonlab::search_config_from_json(nlohmann::json::parse(config_json));
    const auto result = maximize ? bosonlab::maximize_generated_entropy(config)
                                 : bosonlab::minimize_generated_entropy(config);
    *result_json = dup_string(bosonlab::search_result_to_json(result).dump());
    return BL_OK;
  });
}

}  // extern "C"
