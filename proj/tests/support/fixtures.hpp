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

#include <random>

#include "pfbraid/state.hpp"

namespace testsupport {

inline pfbraid::Matrix ginibre_density(std::int64_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  pfbraid::Matrix g(dim, dim);
  for (std::int64_t r = 0; r < dim; ++r) {
    for (std::int64_t c = 0; c < dim; ++c) g(r, c) = {normal(rng), normal(rng)};
  }
  pfbraid::Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

/// Keeps the entries (r, c) with p | r - c.  This is a twirl by powers of the
/// clock matrix, so positivity survives; the result has charge support in pZ.
inline pfbraid::Matrix charge_filter(const pfbraid::Matrix& rho, int p) {
  pfbraid::Matrix out = rho;
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
      if ((r - c) % p != 0) out(r, c) = 0.0;
    }
  }
  return out;
}

/// One-block functional with density supported on charges in pZ (p = d gives a
/// neutral state).
inline pfbraid::StateFunctional block_state(int d, int p, std::mt19937_64& rng) {
  const pfbraid::AlgebraParams params(d);
  const pfbraid::Matrix rho = charge_filter(ginibre_density(d, rng), p);
  return pfbraid::density_to_functional(
      pfbraid::DensityState(pfbraid::Operator(params, 1, rho)));
}

inline pfbraid::StateFunctional density_functional(const pfbraid::AlgebraParams& params, int blocks,
                                                   const pfbraid::Matrix& rho) {
  return pfbraid::density_to_functional(pfbraid::DensityState(pfbraid::Operator(params, blocks, rho)));
}

}  // namespace testsupport
