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

#include <utility>
#include <vector>

#include "pfbraid/algebra.hpp"
#include "pfbraid/braid.hpp"
#include "pfbraid/matrix_rep.hpp"

namespace pfbraid {

/// Raised when basis values do not come from a positive functional.
class InconsistentFunctional : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A linear functional on PF_{2m}, stored by its values on the monomial basis
/// (indexed as in `monomial_index`).
class StateFunctional {
 public:
  StateFunctional(AlgebraParams params, int blocks, std::vector<Complex> values);

  /// phi(M) = 0 for every non-identity monomial.
  static StateFunctional tracial(const AlgebraParams& params, int blocks);

  const AlgebraParams& params() const { return params_; }
  int blocks() const { return blocks_; }
  const std::vector<Complex>& values() const { return values_; }

  Complex value(const Word& word) const;

 private:
  AlgebraParams params_;
  int blocks_;
  std::vector<Complex> values_;
};

/// Linear extension; throws SupportOutOfRange when a strand exceeds 2m.
Complex evaluate(const StateFunctional& phi, const AlgebraElement& a);

struct AxiomReport {
  double unit_error = 0.0;
  double hermiticity_error = 0.0;
  /// Smallest eigenvalue of G_{MN} = phi(M^* N).  G is d^m times the right
  /// multiplication by the density, so this is d^m * lambda_min(D).
  double min_gram_eigenvalue = 0.0;
  bool pass = false;
};

AxiomReport check_axioms(const StateFunctional& phi, double tol = 1e-9);

/// PSD, trace-one density on m blocks.
class DensityState {
 public:
  /// Validates eigenvalues >= -psd_tol and |tr - 1| <= trace_tol.
  explicit DensityState(Operator rho, double psd_tol = 1e-10, double trace_tol = 1e-12);

  static DensityState maximally_mixed(const AlgebraParams& params, int blocks);

  /// |psi><psi| / <psi|psi>.
  static DensityState pure(const AlgebraParams& params, int blocks, const Vector& psi);

  const Operator& rho() const { return rho_; }
  const Matrix& matrix() const { return rho_.matrix(); }
  int blocks() const { return rho_.blocks(); }
  const AlgebraParams& params() const { return rho_.params(); }

 private:
  Operator rho_;
};

/// phi(M) = tr(D M).
StateFunctional density_to_functional(const DensityState& density);

/// D = d^{-m} sum_N phi(N^*) N, without validation.
Matrix functional_matrix(const StateFunctional& phi);

/// Validated inverse of density_to_functional; throws InconsistentFunctional
/// when the reconstruction has an eigenvalue below -tol.
DensityState functional_to_density(const StateFunctional& phi, double tol = 1e-9);

/// prod rho over any number of blocks, evaluated on demand.
class ProductState {
 public:
  /// `rho` must be a functional on one block.
  explicit ProductState(StateFunctional rho);

  const AlgebraParams& params() const { return rho_.params(); }
  const StateFunctional& factor() const { return rho_; }

  /// Product of rho over the per-block factors of `word`.
  Complex value(const Word& word) const;
  Complex evaluate(const AlgebraElement& a) const;

  /// The same state as a dense functional on m blocks.
  StateFunctional truncate(int blocks) const;

 private:
  StateFunctional rho_;
};

StateFunctional product_state(const StateFunctional& rho, int blocks);

struct CheckResult {
  bool pass = false;
  double residual = 0.0;
};

/// Largest |phi(M)| over charged monomials.
CheckResult is_neutral(const StateFunctional& phi, double tol = 1e-10);

/// Largest spectral norm of b_j D b_j^* - D, j = 1..m-1.
CheckResult is_braid_invariant(const StateFunctional& phi, double tol = 1e-9,
                               FourStringOrder order = FourStringOrder::Adjoint);

struct GnsData {
  int dim = 0;
  /// rep[j-1] is the image of c_j.
  std::vector<Matrix> rep;
  Vector cyclic_vector;
  /// Gram matrix over the monomial basis.
  Matrix gram;
};

/// Throws InconsistentFunctional when the Gram matrix has an eigenvalue below
/// -positivity_tol.  The rank cut is relative to the largest eigenvalue.
GnsData gns(const StateFunctional& phi, double rank_tol = 1e-9, double positivity_tol = 1e-9);

/// <Omega, pi(M) Omega> for a basis word, from GNS data.
Complex gns_expectation(const GnsData& data, const Word& word);

/// Convex combination; throws std::invalid_argument on negative weights, a
/// weight sum away from 1, or mismatched truncations.
StateFunctional mixture(const std::vector<std::pair<double, StateFunctional>>& parts);

}  // namespace pfbraid
