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

#include <optional>
#include <string>

#include <json.hpp>

#include "pfbraid/definetti.hpp"

namespace pfbraid::report {

using json = nlohmann::json;

/// {test, d, m, params, residuals, bound, pass}; bound is null when absent.
json test_report(const std::string& test, int d, int m, json params, json residuals,
                 std::optional<double> bound, bool pass);

json to_json(const AveragingReport& r, int d);
json to_json(const DiracReport& r, int d, int m, double residual_tol, double covariance_tol);
json to_json(const ChargeStructure& c);
json to_json(const AdmissibilityReport& r, int d);
json to_json(const FactorizationReport& r, int d, int m, double tol);

/// Top-level CLI document.
struct Envelope {
  std::string command;
  int d = 0;
  std::optional<int> m;
  std::optional<int> k;
  double tol = 0.0;
  json results = json::object();
  bool pass = false;
  double wall_time_ms = 0.0;

  json to_json() const;
};

}  // namespace pfbraid::report
