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
#include <set>
#include <utility>
#include <vector>

#include "pfbraid/algebra.hpp"
#include "pfbraid/braid.hpp"
#include "pfbraid/matrix_rep.hpp"
#include "pfbraid/state.hpp"

namespace pfbraid {

/// Raised when a product factor has charge outside p0 Z.
class InadmissibleState : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (1/k) sum_{n=1..k} alpha^n(x).
AlgebraElement shift_average(const AlgebraElement& x, int k);

struct AveragingReport {
  int k = 0;
  int m = 0;
  double norm_a = 0.0;
  double norm_x = 0.0;
  double bound = 0.0;
  /// ||(S_k(x) A - q^r A S_k(x)) Omega|| in the GNS space of the state.
  double observed = 0.0;
  /// |phi(S_k(x) A) - q^r phi(A S_k(x))|.
  double scalar_deviation = 0.0;
  /// |phi(S_k(x) A) - phi(x) phi(A)|.
  double gap = 0.0;
  bool pass = false;
};

/// Probes the averaged twisted commutator against the 2m/k bound, m the
/// larger block support of x and A.  Both must be homogeneous.
AveragingReport tail_expectation_probe(const AlgebraElement& x, const AlgebraElement& a,
                                       const ProductState& phi, int k);

/// |phi(xy) - phi(x) phi(y)| for x, y on disjoint, ordered sets of blocks.
double t_independence_test(const StateFunctional& phi, const AlgebraElement& x,
                           const AlgebraElement& y);
double t_independence_test(const ProductState& phi, const AlgebraElement& x,
                           const AlgebraElement& y);

struct ChargeStructure {
  int d = 0;
  int p0 = 0;
  bool square_free = false;
  /// {0, p0, 2 p0, ...} below d.
  std::vector<int> admissible;
  std::optional<int> m0_estimate;
};

ChargeStructure charge_structure(int d);

struct AdmissibilityReport {
  bool admissible = false;
  /// Charges with a non-zero density component outside p0 Z.
  std::vector<int> offending;
  /// Largest coefficient magnitude per charge.
  std::vector<double> charge_weight;
};

AdmissibilityReport admissibility_check(const StateFunctional& rho, double tol = 1e-10);

/// Throws InadmissibleState unless rho is admissible.
void require_admissible(const StateFunctional& rho, double tol = 1e-10);

/// Spectral norm of [alpha^j(x), alpha^k(y)], x and y homogeneous in PF_2.
double cross_block_commutation(const AlgebraElement& x, const AlgebraElement& y, int j, int k);

/// Largest truncation dimension accepted by the commutant solver.
inline constexpr std::int64_t kMaxCommutantDimension = 32;

struct FixedAlgebraBasis {
  int m = 0;
  std::vector<Operator> basis;
  int dim = 0;
  std::set<int> charge_support;
  int m0_estimate = 0;
};

FixedAlgebraBasis fixed_point_algebra(int blocks, const AlgebraParams& params,
                                      FourStringOrder order = FourStringOrder::Adjoint);

struct InvariantProjection {
  DensityState density;
  double commutator_residual = 0.0;
  bool twirled = false;
};

/// Trace-orthogonal projection onto the commutant of b_1..b_{m-1}.
InvariantProjection invariant_project(const DensityState& density,
                                      FourStringOrder order = FourStringOrder::Adjoint,
                                      double tol = 1e-9);

struct DiracReport {
  double residual = 0.0;
  double covariance = 0.0;
  int range_rank = 0;
  bool is_dirac = false;
};

DiracReport dirac_check(const std::vector<std::pair<double, Matrix>>& mixture,
                        double residual_tol = 1e-8, double covariance_tol = 1e-8,
                        double range_cutoff = 1e-10);

/// phi(M) = (sum_j w_j chi_j(deg M)) (prod rho)(M) with chi_j(g m0) =
/// exp(2 pi i j g m0 / d), and phi(M) = 0 when m0 does not divide deg M.
StateFunctional character_twisted_state(const std::vector<double>& weights,
                                        const StateFunctional& rho, int m0, int blocks);

struct FactorizationReport {
  double residual = 0.0;
  /// Basis index of the worst tuple.
  std::int64_t worst = 0;
};

/// max |phi(prod C_k) - prod phi(C_k)| over all tuples of per-block monomials.
FactorizationReport factorization_test(const StateFunctional& phi);

}  // namespace pfbraid
