// Copyright 2026 The pfbraid Authors
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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pfbraid/state.hpp"

// JSON layouts:
//   functional: {"d", "m", "terms": [{"monomial": [[strand, exp], ...], "value": [re, im]}]}
//   density:    {"d", "m", "matrix": [[re, im], ...]}   row-major, d^{2m} pairs
//   mixture:    {"components": [{"weight": w, "density": <density>}]}
// Functional terms must be in normal form; absent monomials have value 0.

namespace pfbraid::io {

using json = nlohmann::json;

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

json functional_to_json(const StateFunctional& phi);
StateFunctional functional_from_json(const json& j, ZetaBranch branch = ZetaBranch::Standard);

json density_to_json(const Matrix& m, int d, int blocks);
Operator density_from_json(const json& j, ZetaBranch branch = ZetaBranch::Standard);

/// Accepts either a functional or a density document.
StateFunctional state_from_json(const json& j, ZetaBranch branch = ZetaBranch::Standard);

struct Mixture {
  int d = 0;
  int m = 0;
  std::vector<std::pair<double, Matrix>> components;
};

json mixture_to_json(const Mixture& mixture);
Mixture mixture_from_json(const json& j);

/// {"text", "terms": [{"monomial", "value"}]}.
json element_to_json(const AlgebraElement& a);

json read_json_file(const std::string& path);

}  // namespace pfbraid::io
