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

#include "pfbraid/state.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "pfbraid/kernels.hpp"
#include "pfbraid/linalg.hpp"

namespace pfbraid {

// --- StateFunctional ------------------------------------------------------

StateFunctional::StateFunctional(AlgebraParams params, int blocks, std::vector<Complex> values)
    : params_(std::move(params)), blocks_(blocks), values_(std::move(values)) {
  const auto count = monomial_count(params_.d(), blocks_);
  if (static_cast<std::int64_t>(values_.size()) != count) {
    throw std::invalid_argument("a functional on " + std::to_string(blocks_) +
                                " blocks needs " + std::to_string(count) + " basis values");
  }
}

StateFunctional StateFunctional::tracial(const AlgebraParams& params, int blocks) {
  std::vector<Complex> values(monomial_count(params.d(), blocks));
  values[0] = 1.0;
  return StateFunctional(params, blocks, std::move(values));
}

Complex StateFunctional::value(const Word& word) const {
  return values_[monomial_index(word, params_.d(), blocks_)];
}

Complex evaluate(const StateFunctional& phi, const AlgebraElement& a) {
  require_same_algebra(phi.params(), a.params());
  Complex sum{};
  for (const auto& [word, coeff] : a.terms()) sum += realize(coeff, a.params()) * phi.value(word);
  return sum;
}

AxiomReport check_axioms(const StateFunctional& phi, double tol) {
  const auto table = MonomialTable::get(phi.params(), phi.blocks());
  const auto& params = phi.params();
  const auto& v = phi.values();
  AxiomReport report;
  report.unit_error = std::abs(v[0] - 1.0);
  for (std::int64_t idx = 0; idx < table->count(); ++idx) {
    const Complex star =
        params.phase(table->adjoint_phase(idx)) * v[table->adjoint_index(idx)];
    report.hermiticity_error = std::max(report.hermiticity_error, std::abs(star - std::conj(v[idx])));
  }
  report.min_gram_eigenvalue =
      static_cast<double>(table->dim()) * linalg::min_eigenvalue(functional_matrix(phi));
  report.pass = report.unit_error <= tol && report.hermiticity_error <= tol &&
                report.min_gram_eigenvalue >= -tol;
  return report;
}

// --- DensityState ---------------------------------------------------------

DensityState::DensityState(Operator rho, double psd_tol, double trace_tol) : rho_(std::move(rho)) {
  const Matrix& m = rho_.matrix();
  const double herm = linalg::hermiticity_defect(m);
  if (herm > psd_tol * std::max<double>(1.0, static_cast<double>(m.rows()))) {
    throw InconsistentFunctional("density is not Hermitian (defect " + std::to_string(herm) + ")");
  }
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > trace_tol) {
    throw InconsistentFunctional("density trace is " + std::to_string(tr.real()) + ", not 1");
  }
  const double low = linalg::min_eigenvalue(m);
  if (low < -psd_tol) {
    throw InconsistentFunctional("density has eigenvalue " + std::to_string(low));
  }
}

DensityState DensityState::maximally_mixed(const AlgebraParams& params, int blocks) {
  const auto dim = checked_dimension(params.d(), blocks);
  return DensityState(Operator(params, blocks, Matrix::Identity(dim, dim) / static_cast<double>(dim)));
}

DensityState DensityState::pure(const AlgebraParams& params, int blocks, const Vector& psi) {
  const double n2 = psi.squaredNorm();
  if (n2 == 0.0) throw std::invalid_argument("pure state needs a non-zero vector");
  return DensityState(Operator(params, blocks, psi * psi.adjoint() / n2));
}

StateFunctional density_to_functional(const DensityState& density) {
  const auto table = MonomialTable::get(density.params(), density.blocks());
  return StateFunctional(density.params(), density.blocks(),
                         kernels::trace_pairing(density.matrix(), *table));
}

Matrix functional_matrix(const StateFunctional& phi) {
  const auto table = MonomialTable::get(phi.params(), phi.blocks());
  const auto& params = phi.params();
  const auto& v = phi.values();
  const double inv_dim = 1.0 / static_cast<double>(table->dim());
  std::vector<Complex> coeffs(table->count());
  for (std::int64_t idx = 0; idx < table->count(); ++idx) {
    coeffs[idx] = inv_dim * params.phase(table->adjoint_phase(idx)) * v[table->adjoint_index(idx)];
  }
  return kernels::densify(coeffs, *table);
}

DensityState functional_to_density(const StateFunctional& phi, double tol) {
  return DensityState(Operator(phi.params(), phi.blocks(), functional_matrix(phi)), tol, tol);
}

// --- ProductState ---------------------------------------------------------

ProductState::ProductState(StateFunctional rho) : rho_(std::move(rho)) {
  if (rho_.blocks() != 1) throw std::invalid_argument("product factor must live on one block");
}

Complex ProductState::value(const Word& word) const {
  const int d = params().d();
  const auto& v = rho_.values();
  Complex out{1.0, 0.0};
  const auto& letters = word.letters();
  std::size_t i = 0;
  while (i < letters.size()) {
    const int block = (letters[i].strand + 1) / 2;
    int odd = 0;
    int even = 0;
    for (; i < letters.size() && (letters[i].strand + 1) / 2 == block; ++i) {
      (letters[i].strand % 2 == 1 ? odd : even) = letters[i].exponent;
    }
    out *= v[odd * d + even];
    if (out == Complex{}) break;
  }
  return out;
}

Complex ProductState::evaluate(const AlgebraElement& a) const {
  require_same_algebra(params(), a.params());
  Complex sum{};
  for (const auto& [word, coeff] : a.terms()) sum += realize(coeff, a.params()) * value(word);
  return sum;
}

StateFunctional ProductState::truncate(int blocks) const {
  const int d = params().d();
  const auto count = monomial_count(d, blocks);
  std::vector<Complex> values(count);
  for (std::int64_t idx = 0; idx < count; ++idx) values[idx] = value(monomial_at(idx, d, blocks));
  return StateFunctional(params(), blocks, std::move(values));
}

StateFunctional product_state(const StateFunctional& rho, int blocks) {
  return ProductState(rho).truncate(blocks);
}

// --- checks ---------------------------------------------------------------

CheckResult is_neutral(const StateFunctional& phi, double tol) {
  const int d = phi.params().d();
  CheckResult r;
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(phi.values().size()); ++idx) {
    if (monomial_at(idx, d, phi.blocks()).degree(d).is_neutral()) continue;
    r.residual = std::max(r.residual, std::abs(phi.values()[idx]));
  }
  r.pass = r.residual <= tol;
  return r;
}

CheckResult is_braid_invariant(const StateFunctional& phi, double tol, FourStringOrder order) {
  const Matrix density = functional_matrix(phi);
  CheckResult r;
  for (int j = 1; j < phi.blocks(); ++j) {
    const Matrix b = four_string_braid(j, phi.blocks(), phi.params(), order).op.matrix();
    r.residual = std::max(r.residual, linalg::spectral_norm(b * density * b.adjoint() - density));
  }
  r.pass = r.residual <= tol;
  return r;
}

// --- GNS ------------------------------------------------------------------

GnsData gns(const StateFunctional& phi, double rank_tol, double positivity_tol) {
  const auto& params = phi.params();
  const int d = params.d();
  const int blocks = phi.blocks();
  GnsData out;
  out.gram = kernels::gram_matrix(phi.values(), params, blocks);

  Eigen::SelfAdjointEigenSolver<Matrix> es(linalg::hermitian_part(out.gram));
  const Eigen::VectorXd& ev = es.eigenvalues();
  if (ev(0) < -positivity_tol) {
    throw InconsistentFunctional("Gram matrix has eigenvalue " + std::to_string(ev(0)));
  }
  const double top = ev(ev.size() - 1);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > rank_tol * top) keep.push_back(i);
  }
  out.dim = static_cast<int>(keep.size());
  const Eigen::Index count = out.gram.rows();
  Matrix u(count, out.dim);
  for (int a = 0; a < out.dim; ++a) u.col(a) = es.eigenvectors().col(keep[a]) / std::sqrt(ev(keep[a]));

  const Matrix gu = out.gram * u;
  out.cyclic_vector = gu.row(0).adjoint();

  for (int strand = 1; strand <= 2 * blocks; ++strand) {
    Matrix left = Matrix::Zero(count, count);
    for (Eigen::Index n = 0; n < count; ++n) {
      const Word w = monomial_at(n, d, blocks);
      std::vector<RawLetter> word{{strand, 1}};
      for (const auto& l : w.letters()) word.push_back({l.strand, l.exponent});
      const Monomial prod = normalize(word, params);
      left(monomial_index(prod.word, d, blocks), n) = realize(prod.coefficient, params);
    }
    out.rep.push_back(gu.adjoint() * left * u);
  }
  return out;
}

Complex gns_expectation(const GnsData& data, const Word& word) {
  Vector v = data.cyclic_vector;
  const auto& letters = word.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (it->strand > static_cast<int>(data.rep.size())) {
      throw SupportOutOfRange("word reaches beyond the GNS truncation");
    }
    for (int e = 0; e < it->exponent; ++e) v = data.rep[it->strand - 1] * v;
  }
  return data.cyclic_vector.dot(v);
}

StateFunctional mixture(const std::vector<std::pair<double, StateFunctional>>& parts) {
  if (parts.empty()) throw std::invalid_argument("mixture needs at least one component");
  double total = 0.0;
  for (const auto& [w, phi] : parts) {
    if (!(w >= 0.0)) throw std::invalid_argument("mixture weights must be non-negative");
    require_same_algebra(parts.front().second.params(), phi.params());
    if (phi.blocks() != parts.front().second.blocks()) {
      throw std::invalid_argument("mixture components act on different block counts");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("mixture weights must sum to 1");
  const auto& first = parts.front().second;
  std::vector<Complex> values(first.values().size());
  for (const auto& [w, phi] : parts) {
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += w * phi.values()[i];
  }
  return StateFunctional(first.params(), first.blocks(), std::move(values));
}

}  // namespace pfbraid
