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

#include "bosonlab/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace bosonlab {

using nlohmann::json;

cplx cplx_from_json(const json& j) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("complex values must be [re, im] arrays");
  }
  return cplx(j[0].get<double>(), j[1].get<double>());
}

json cplx_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

StateSpec state_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type")) {
    throw std::invalid_argument("state spec must be an object with a \"type\" field");
  }
  StateSpec spec;
  const std::string type = j.at("type").get<std::string>();
  if (type == "coherent") {
    spec.variant = CoherentSpec{cplx_from_json(j.at("alpha"))};
  } else if (type == "fock") {
    spec.variant = FockSpec{j.at("n").get<int>()};
  } else if (type == "squeezed_vacuum") {
    spec.variant = SqueezedVacuumSpec{j.at("r").get<double>(), j.value("phi", 0.0)};
  } else if (type == "higher_cat") {
    HigherCatSpec cat;
    cat.alpha = cplx_from_json(j.at("alpha"));
    cat.n = j.at("n").get<int>();
    if (j.contains("relative_phases")) {
      cat.relative_phases = j.at("relative_phases").get<std::vector<double>>();
    } else {
      cat.relative_phases.assign(static_cast<std::size_t>(std::max(cat.n, 0)), 0.0);
    }
    spec.variant = cat;
  } else if (type == "generalized_kl") {
    GeneralizedKLSpec g;
    g.k = j.at("k").get<int>();
    g.l = j.at("l").get<int>();
    g.eta = cplx_from_json(j.at("eta"));
    g.seed = j.value("seed", 0);
    spec.variant = g;
  } else {
    throw std::invalid_argument("unknown state type: " + type);
  }
  spec.cutoff = j.value("cutoff", -1);
  return spec;
}

json state_spec_to_json(const StateSpec& spec) {
  json j;
  if (const auto* c = std::get_if<CoherentSpec>(&spec.variant)) {
    j["type"] = "coherent";
    j["alpha"] = cplx_to_json(c->alpha);
  } else if (const auto* f = std::get_if<FockSpec>(&spec.variant)) {
    j["type"] = "fock";
    j["n"] = f->n;
  } else if (const auto* s = std::get_if<SqueezedVacuumSpec>(&spec.variant)) {
    j["type"] = "squeezed_vacuum";
    j["r"] = s->r;
    j["phi"] = s->phi;
  } else if (const auto* h = std::get_if<HigherCatSpec>(&spec.variant)) {
    j["type"] = "higher_cat";
    j["alpha"] = cplx_to_json(h->alpha);
    j["n"] = h->n;
    j["relative_phases"] = h->relative_phases;
  } else {
    const auto& g = std::get<GeneralizedKLSpec>(spec.variant);
    j["type"] = "generalized_kl";
    j["k"] = g.k;
    j["l"] = g.l;
    j["eta"] = cplx_to_json(g.eta);
    j["seed"] = g.seed;
  }
  if (spec.cutoff >= 0) j["cutoff"] = spec.cutoff;
  return j;
}

DeviceSpec device_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type")) {
    throw std::invalid_argument("device spec must be an object with a \"type\" field");
  }
  DeviceSpec spec;
  const std::string type = j.at("type").get<std::string>();
  if (type == "beam_splitter") {
    spec.variant =
        BeamSplitterSpec{j.at("theta").get<double>(), j.value("phi", 0.0), j.value("psi", 0.0)};
  } else if (type == "two_mode_squeezer") {
    spec.variant = TwoModeSqueezerSpec{j.at("r").get<double>(), j.value("psi", 0.0)};
  } else if (type == "general_bilinear") {
    GeneralBilinearSpec g;
    g.m = j.at("m").get<int>();
    g.n = j.at("n").get<int>();
    g.r = j.at("r").get<double>();
    g.psi = j.value("psi", 0.0);
    g.dagger_a = j.value("dagger_a", false);
    spec.variant = g;
  } else {
    throw std::invalid_argument("unknown device type: " + type);
  }
  return spec;
}

json device_spec_to_json(const DeviceSpec& spec) {
  json j;
  if (const auto* bs = std::get_if<BeamSplitterSpec>(&spec.variant)) {
    j["type"] = "beam_splitter";
    j["theta"] = bs->theta;
    j["phi"] = bs->phi;
    j["psi"] = bs->psi;
  } else if (const auto* tm = std::get_if<TwoModeSqueezerSpec>(&spec.variant)) {
    j["type"] = "two_mode_squeezer";
    j["r"] = tm->r;
    j["psi"] = tm->psi;
  } else {
    const auto& g = std::get<GeneralBilinearSpec>(spec.variant);
    j["type"] = "general_bilinear";
    j["m"] = g.m;
    j["n"] = g.n;
    j["r"] = g.r;
    j["psi"] = g.psi;
    j["dagger_a"] = g.dagger_a;
  }
  return j;
}

SearchConfig search_config_from_json(const json& j) {
  SearchConfig c;
  c.N = j.at("N").get<double>();
  c.device = device_spec_from_json(j.at("device"));
  c.cutoff = j.value("cutoff", c.cutoff);
  c.restarts = j.value("restarts", c.restarts);
  c.max_iters = j.value("max_iters", c.max_iters);
  c.step_tolerance = j.value("step_tolerance", c.step_tolerance);
  c.seed = j.value("seed", 0u);
  return c;
}

json search_result_to_json(const SearchResult& result) {
  json j;
  j["best_value"] = result.best_value;
  j["best_state_a"] = fock_vector_to_json(result.best_state_a);
  j["best_state_b"] = fock_vector_to_json(result.best_state_b);
  j["constraint_violation"] = result.constraint_violation;
  j["iterations_used"] = result.iterations_used;
  j["converged"] = result.converged;
  j["best_restart"] = result.best_restart;
  return j;
}

json fock_vector_to_json(const FockVector& v) {
  json arr = json::array();
  for (const cplx& z : v.amps) arr.push_back(cplx_to_json(z));
  return arr;
}

FockVector fock_vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("amplitude list must be a non-empty array");
  }
  FockVector v(static_cast<int>(j.size()) - 1);
  for (std::size_t i = 0; i < j.size(); ++i) v.amps[i] = cplx_from_json(j[i]);
  return v;
}

}  // namespace bosonlab
