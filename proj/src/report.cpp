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

#include "pfbraid/report.hpp"

namespace pfbraid::report {

json test_report(const std::string& test, int d, int m, json params, json residuals,
                 std::optional<double> bound, bool pass) {
  return {{"test", test},
          {"d", d},
          {"m", m},
          {"params", std::move(params)},
          {"residuals", std::move(residuals)},
          {"bound", bound ? json(*bound) : json(nullptr)},
          {"pass", pass}};
}

json to_json(const AveragingReport& r, int d) {
  return test_report("tail_expectation_probe", d, r.m,
                     {{"k", r.k}, {"norm_a", r.norm_a}, {"norm_x", r.norm_x}},
                     {{"observed", r.observed},
                      {"scalar_deviation", r.scalar_deviation},
                      {"gap", r.gap}},
                     r.bound, r.pass);
}

json to_json(const DiracReport& r, int d, int m, double residual_tol, double covariance_tol) {
  json out = test_report("dirac_check", d, m,
                         {{"residual_tol", residual_tol}, {"covariance_tol", covariance_tol}},
                         {{"residual", r.residual}, {"covariance", r.covariance}}, std::nullopt,
                         r.is_dirac);
  out["is_dirac"] = r.is_dirac;
  out["range_rank"] = r.range_rank;
  return out;
}

json to_json(const ChargeStructure& c) {
  json out = {{"d", c.d}, {"p0", c.p0}, {"square_free", c.square_free}, {"admissible", c.admissible}};
  out["m0_estimate"] = c.m0_estimate ? json(*c.m0_estimate) : json(nullptr);
  return out;
}

json to_json(const AdmissibilityReport& r, int d) {
  json out = test_report("admissibility_check", d, 1, {{"p0", charge_structure(d).p0}},
                         {{"charge_weight", r.charge_weight}}, std::nullopt, r.admissible);
  out["offending"] = r.offending;
  return out;
}

json to_json(const FactorizationReport& r, int d, int m, double tol) {
  json out = test_report("factorization_test", d, m, {{"tol", tol}}, {{"max", r.residual}},
                         std::nullopt, r.residual <= tol);
  out["worst_monomial"] = monomial_at(r.worst, d, m).key();
  return out;
}

json Envelope::to_json() const {
  json params = {{"d", d}, {"tol", tol}};
  params["m"] = m ? json(*m) : json(nullptr);
  params["k"] = k ? json(*k) : json(nullptr);
  return {{"command", command},
          {"params", params},
          {"results", results},
          {"pass", pass},
          {"wall_time_ms", wall_time_ms}};
}

}  // namespace pfbraid::report
