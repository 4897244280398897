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

#include <vector>

#include "pfbraid/matrix_rep.hpp"

// Dense loops over the monomial basis.  The functions in `kernels` run under
// OpenMP; `kernels::serial` holds single-threaded reference versions with the
// same contracts, used by the tests and the benchmark.

namespace pfbraid::kernels {

/// x_M = tr(M^* X) / dim for every basis monomial M.
std::vector<Complex> expand_coefficients(const Matrix& x, const MonomialTable& table);

/// sum_M c_M M.
Matrix densify(const std::vector<Complex>& coeffs, const MonomialTable& table);

/// tr(D M) for every basis monomial M.
std::vector<Complex> trace_pairing(const Matrix& density, const MonomialTable& table);

/// G_{MN} = phi(M^* N) from basis values phi(M).
Matrix gram_matrix(const std::vector<Complex>& values, const AlgebraParams& params, int blocks);

/// Number of OpenMP threads the parallel kernels will use.
int thread_count();

namespace serial {

std::vector<Complex> expand_coefficients(const Matrix& x, const MonomialTable& table);
Matrix densify(const std::vector<Complex>& coeffs, const MonomialTable& table);
std::vector<Complex> trace_pairing(const Matrix& density, const MonomialTable& table);
Matrix gram_matrix(const std::vector<Complex>& values, const AlgebraParams& params, int blocks);

}  // namespace serial

}  // namespace pfbraid::kernels
