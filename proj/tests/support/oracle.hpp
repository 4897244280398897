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

// Reference constructions for the test suites.  Everything here is built from
// kron products of d x d clock and shift matrices with roots of unity taken
// from std::polar; nothing calls into the library's phase arithmetic.

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pfbraid/expr.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;

Complex q(int d);
Complex zeta(int d);
Complex omega(int d);

Mat clock(int d);
Mat shift(int d);
Mat kron(const Mat& a, const Mat& b);
Mat identity(int d, int blocks);

/// Jordan-Wigner image of c_j on `blocks` sites, built site by site.
Mat generator(int d, int blocks, int j);

/// Product of generator powers, left to right.
Mat word(int d, int blocks, const std::vector<std::pair<int, long long>>& letters);

Mat two_string(int d, int blocks, int k);
Mat four_string(int d, int blocks, int j);

/// Matrix value of an expression tree at d, m blocks.
Mat evaluate(const pfbraid::expr::Node& node, int d, int blocks);

/// Largest entry modulus.
double max_abs(const Mat& m);

int p0_brute_force(int d);
bool square_free_by_trial_division(int d);

}  // namespace oracle
