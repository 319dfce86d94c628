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

#ifndef BOSONLAB_ERRORS_HPP
#define BOSONLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bosonlab {

// Probability weight was lost to the Fock cutoff beyond the allowed budget.
class truncation_error : public std::runtime_error {
 public:
  explicit truncation_error(const std::string& what) : std::runtime_error(what) {}
};

// A construction collapsed to (numerically) zero norm.
class degenerate_input_error : public std::runtime_error {
 public:
  explicit degenerate_input_error(const std::string& what) : std::runtime_error(what) {}
};

// Requested a state family outside its convergence region.
class divergent_series_error : public std::invalid_argument {
 public:
  explicit divergent_series_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace bosonlab

#endif  // BOSONLAB_ERRORS_HPP
