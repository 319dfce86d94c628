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

#ifndef BOSONLAB_JSON_IO_HPP
#define BOSONLAB_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "bosonlab/devices.hpp"
#include "bosonlab/search.hpp"
#include "bosonlab/states.hpp"

namespace bosonlab {

// Complex numbers are serialized as [re, im] arrays throughout.
cplx cplx_from_json(const nlohmann::json& j);
nlohmann::json cplx_to_json(cplx z);

// {"type": "coherent" | "fock" | "squeezed_vacuum" | "higher_cat" |
//  "generalized_kl", ..., "cutoff": optional int}
StateSpec state_spec_from_json(const nlohmann::json& j);
nlohmann::json state_spec_to_json(const StateSpec& spec);

// {"type": "beam_splitter" | "two_mode_squeezer" | "general_bilinear", ...}
DeviceSpec device_spec_from_json(const nlohmann::json& j);
nlohmann::json device_spec_to_json(const DeviceSpec& spec);

SearchConfig search_config_from_json(const nlohmann::json& j);
nlohmann::json search_result_to_json(const SearchResult& result);

nlohmann::json fock_vector_to_json(const FockVector& v);
FockVector fock_vector_from_json(const nlohmann::json& j);

}  // namespace bosonlab

#endif  // BOSONLAB_JSON_IO_HPP
