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

#include "pfbraid/definetti.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "pfbraid/linalg.hpp"

namespace pfbraid {

namespace {

std::set<int> blocks_touched(const AlgebraElement& a) {
  std::set<int> out;
  for (const auto& [word, coeff] : a.terms()) {
    for (const auto& l : word.letters()) out.insert((l.strand + 1) / 2);
  }
  return out;
}

void require_ordered_disjoint(const AlgebraElement& x, const AlgebraElement& y) {
  const auto bx = blocks_touched(x);
  const auto by = blocks_touched(y);
  if (bx.empty() || by.empty()) return;
  if (*bx.rbegin() < *by.begin() || *by.rbegin() < *bx.begin()) return;
  throw std::invalid_argument("x and y must sit on disjoint, ordered sets of blocks");
}

Charge require_homogeneous(const AlgebraElement& a, const char* name) {
  const Degree deg = degree(a);
  if (!std::holds_alternative<Charge>(deg)) {
    throw std::invalid_argument(std::string(name) + " must be homogeneous");
  }
  return std::get<Charge>(deg);
}

// Spectral norm through the representation when small enough, otherwise the
// l1 bound on the coefficients.
double element_norm(const AlgebraElement& a) {
  const int blocks = std::max(1, a.blocks_required());
  try {
    if (checked_dimension(a.params().d(), blocks) <= 1024) {
      return linalg::spectral_norm(represent(a, blocks).matrix());
    }
  } catch (const DimensionCapExceeded&) {
  }
  return a.l1_norm();
}

using CommutantKey = std::tuple<int, int, int, int>;

// Orthonormal (Frobenius) basis of the commutant, as vectorized columns.
std::shared_ptr<const Matrix> commutant_columns(const AlgebraParams& params, int blocks,
                                                FourStringOrder order) {
  static std::mutex mutex;
  static std::map<CommutantKey, std::shared_ptr<const Matrix>> cache;
  const CommutantKey key{params.d(), static_cast<int>(params.branch()), blocks,
                         static_cast<int>(order)};
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const auto dim = checked_dimension(params.d(), blocks);
  if (dim > kMaxCommutantDimension) {
    throw DimensionCapExceeded("commutant solver is limited to d^m <= " +
                               std::to_string(kMaxCommutantDimension) + ", got " +
                               std::to_string(dim));
  }
  const Matrix eye = Matrix::Identity(dim, dim);
  Matrix h = Matrix::Zero(dim * dim, dim * dim);
  for (int j = 1; j < blocks; ++j) {
    const Matrix b = four_string_braid(j, blocks, params, order).op.matrix();
    // vec(B X - X B) = (I (x) B - B^T (x) I) vec X for column-major vec.
    const Matrix k = linalg::kron(eye, b) - linalg::kron(b.transpose(), eye);
    h += k.adjoint() * k;
  }
  auto columns = std::make_shared<const Matrix>(linalg::psd_nullspace(h, 1e-10));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.try_emplace(key, std::move(columns)).first->second;
}

Matrix unvec(const Vector& v, Eigen::Index dim) {
  return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

double max_braid_commutator(const Matrix& x, const AlgebraParams& params, int blocks,
                            FourStringOrder order) {
  double worst = 0.0;
  for (int j = 1; j < blocks; ++j) {
    const Matrix b = four_string_braid(j, blocks, params, order).op.matrix();
    worst = std::max(worst, linalg::spectral_norm(b * x - x * b));
  }
  return worst;
}

}  // namespace

AlgebraElement shift_average(const AlgebraElement& x, int k) {
  if (k < 1) throw std::invalid_argument("averaging depth k must be >= 1");
  AlgebraElement out(x.params());
  for (int n = 1; n <= k; ++n) out = out + shift_alpha(x, n);
  return out * Complex{1.0 / k, 0.0};
}

AveragingReport tail_expectation_probe(const AlgebraElement& x, const AlgebraElement& a,
                                       const ProductState& phi, int k) {
  require_same_algebra(x.params(), a.params());
  require_same_algebra(x.params(), phi.params());
  require_admissible(phi.factor());
  const Charge dx = require_homogeneous(x, "x");
  const Charge da = require_homogeneous(a, "A");
  const auto& params = x.params();

  AveragingReport report;
  report.k = k;
  report.m = std::max({1, x.blocks_required(), a.blocks_required()});
  report.norm_a = element_norm(a);
  report.norm_x = element_norm(x);
  report.bound = 2.0 * report.m / k * report.norm_a * report.norm_x;

  const AlgebraElement s = shift_average(x, k);
  const long long r = -static_cast<long long>(dx.value()) * da.value();
  const Coefficient twist{1.0, params.reduce_phase(r * params.q_phase())};
  const AlgebraElement sa = multiply(s, a);
  const AlgebraElement as = multiply(a, s).scaled(twist);
  const AlgebraElement v = sa - as;

  const double norm2 = phi.evaluate(multiply(adjoint(v), v)).real();
  report.observed = std::sqrt(std::max(0.0, norm2));
  const Complex phi_sa = phi.evaluate(sa);
  report.scalar_deviation = std::abs(phi_sa - phi.evaluate(as));
  report.gap = std::abs(phi_sa - phi.evaluate(x) * phi.evaluate(a));
  report.pass = report.observed <= report.bound + 1e-10;
  return report;
}

double t_independence_test(const StateFunctional& phi, const AlgebraElement& x,
                           const AlgebraElement& y) {
  require_ordered_disjoint(x, y);
  return std::abs(evaluate(phi, multiply(x, y)) - evaluate(phi, x) * evaluate(phi, y));
}

double t_independence_test(const ProductState& phi, const AlgebraElement& x,
                           const AlgebraElement& y) {
  require_ordered_disjoint(x, y);
  return std::abs(phi.evaluate(multiply(x, y)) - phi.evaluate(x) * phi.evaluate(y));
}

ChargeStructure charge_structure(int d) {
  if (d < 2) throw std::invalid_argument("d must be >= 2");
  ChargeStructure cs;
  cs.d = d;
  for (int k = 1; k <= d; ++k) {
    if ((static_cast<long long>(k) * k) % d == 0) {
      cs.p0 = k;
      break;
    }
  }
  cs.square_free = cs.p0 == d;
  for (int c = 0; c < d; c += cs.p0) cs.admissible.push_back(c);
  return cs;
}

AdmissibilityReport admissibility_check(const StateFunctional& rho, double tol) {
  const int d = rho.params().d();
  const ChargeStructure cs = charge_structure(d);
  const Operator density(rho.params(), rho.blocks(), functional_matrix(rho));
  AdmissibilityReport report;
  report.charge_weight.assign(d, 0.0);
  for (const auto& [ell, component] : charge_components(expand(density))) {
    double weight = 0.0;
    for (const auto& [word, coeff] : component.terms()) weight = std::max(weight, std::abs(coeff.base));
    report.charge_weight[ell] = weight;
    if (ell % cs.p0 != 0 && weight > tol) report.offending.push_back(ell);
  }
  report.admissible = report.offending.empty();
  return report;
}

void require_admissible(const StateFunctional& rho, double tol) {
  const AdmissibilityReport report = admissibility_check(rho, tol);
  if (!report.admissible) {
    std::string charges;
    for (int c : report.offending) charges += (charges.empty() ? "" : ",") + std::to_string(c);
    throw InadmissibleState("product factor carries charges {" + charges + "} outside p0 Z");
  }
}

double cross_block_commutation(const AlgebraElement& x, const AlgebraElement& y, int j, int k) {
  require_same_algebra(x.params(), y.params());
  require_homogeneous(x, "x");
  require_homogeneous(y, "y");
  if (x.blocks_required() > 1 || y.blocks_required() > 1) {
    throw std::invalid_argument("cross-block commutation takes elements of PF_2");
  }
  if (j < 0 || k < 0 || j == k) throw std::invalid_argument("shifts must be distinct and >= 0");
  const int blocks = std::max(j, k) + 1;
  const Matrix ax = represent(shift_alpha(x, j), blocks).matrix();
  const Matrix ay = represent(shift_alpha(y, k), blocks).matrix();
  return linalg::spectral_norm(ax * ay - ay * ax);
}

FixedAlgebraBasis fixed_point_algebra(int blocks, const AlgebraParams& params,
                                      FourStringOrder order) {
  const auto columns = commutant_columns(params, blocks, order);
  const auto dim = checked_dimension(params.d(), blocks);
  FixedAlgebraBasis out;
  out.m = blocks;
  out.dim = static_cast<int>(columns->cols());
  int generator = params.d();
  for (Eigen::Index c = 0; c < columns->cols(); ++c) {
    Operator op(params, blocks, unvec(columns->col(c), dim));
    const AlgebraElement expansion = expand(op);
    double top = 0.0;
    for (const auto& [w, coeff] : expansion.terms()) top = std::max(top, std::abs(coeff.base));
    for (const auto& [w, coeff] : expansion.terms()) {
      if (std::abs(coeff.base) > 1e-8 * top) {
        const int ell = w.degree(params.d()).value();
        out.charge_support.insert(ell);
        generator = std::gcd(generator, ell);
      }
    }
    out.basis.push_back(std::move(op));
  }
  out.m0_estimate = generator;
  return out;
}

InvariantProjection invariant_project(const DensityState& density, FourStringOrder order,
                                      double tol) {
  const auto& params = density.params();
  const int blocks = density.blocks();
  const Matrix& d0 = density.matrix();
  const Eigen::Index dim = d0.rows();
  if (blocks == 1) return {density, 0.0, false};

  const auto columns = commutant_columns(params, blocks, order);
  const Vector vec = Eigen::Map<const Vector>(d0.data(), dim * dim);
  Matrix p = linalg::hermitian_part(unvec(*columns * (columns->adjoint() * vec), dim));
  Complex tr = p.trace();
  if (std::abs(tr) < 1e-12) throw std::runtime_error("invariant projection has zero trace");
  p /= tr.real();

  bool twirled = false;
  if (linalg::min_eigenvalue(p) < -tol) {
    twirled = true;
    p = d0;
    std::vector<Matrix> braids;
    for (int j = 1; j < blocks; ++j) {
      braids.push_back(four_string_braid(j, blocks, params, order).op.matrix());
    }
    for (int iter = 0; iter < 100000; ++iter) {
      Matrix next = Matrix::Zero(dim, dim);
      for (const auto& b : braids) next += b * p * b.adjoint() + b.adjoint() * p * b;
      p = next / static_cast<double>(2 * braids.size());
      if (max_braid_commutator(p, params, blocks, order) <= tol) break;
    }
    p = linalg::hermitian_part(p);
    p /= p.trace().real();
  }
  const double residual = max_braid_commutator(p, params, blocks, order);
  return {DensityState(Operator(params, blocks, std::move(p)), tol, 1e-10), residual, twirled};
}

DiracReport dirac_check(const std::vector<std::pair<double, Matrix>>& mixture, double residual_tol,
                        double covariance_tol, double range_cutoff) {
  if (mixture.empty()) throw std::invalid_argument("mixture needs at least one density");
  double total = 0.0;
  const Eigen::Index n = mixture.front().second.rows();
  for (const auto& [w, m] : mixture) {
    if (!(w >= 0.0)) throw std::invalid_argument("mixture weights must be non-negative");
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("density dimensions differ");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("mixture weights must sum to 1");

  Matrix mean = Matrix::Zero(n, n);
  Matrix second = Matrix::Zero(n * n, n * n);
  for (const auto& [w, m] : mixture) {
    mean += w * m;
    second += w * linalg::kron(m, m);
  }
  DiracReport report;
  report.residual = (second - linalg::kron(mean, mean)).norm();

  const linalg::Range range = linalg::psd_range(mean, range_cutoff);
  const Eigen::Index r = range.basis.cols();
  report.range_rank = static_cast<int>(r);
  const Eigen::VectorXd inv_sqrt = range.eigenvalues.cwiseSqrt().cwiseInverse();
  for (const auto& [w, m] : mixture) {
    const Matrix c =
        inv_sqrt.asDiagonal() * (range.basis.adjoint() * m * range.basis) * inv_sqrt.asDiagonal();
    const double tr_c = c.trace().real() / static_cast<double>(r);
    const double tr_c2 = (c * c).trace().real() / static_cast<double>(r);
    report.covariance += w * (tr_c2 - tr_c * tr_c);
  }
  report.is_dirac = report.residual <= residual_tol && report.covariance <= covariance_tol;
  return report;
}

StateFunctional character_twisted_state(const std::vector<double>& weights,
                                        const StateFunctional& rho, int m0, int blocks) {
  const auto& params = rho.params();
  const int d = params.d();
  if (m0 < 1 || d % m0 != 0) throw std::invalid_argument("m0 must divide d");
  if (static_cast<int>(weights.size()) != d / m0) {
    throw std::invalid_argument("need one weight per character of Z_{d/m0}");
  }
  require_admissible(rho);
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(rho.values().size()); ++idx) {
    const int ell = monomial_at(idx, d, 1).degree(d).value();
    if (ell % m0 != 0 && std::abs(rho.values()[idx]) > 1e-10) {
      throw InadmissibleState("rho has charge " + std::to_string(ell) + " outside m0 Z");
    }
  }
  const ProductState prod(rho);
  const auto count = monomial_count(d, blocks);
  std::vector<Complex> values(count);
  for (std::int64_t idx = 0; idx < count; ++idx) {
    const Word w = monomial_at(idx, d, blocks);
    const int deg = w.degree(d).value();
    if (deg % m0 != 0) continue;
    Complex chi{};
    for (std::size_t j = 0; j < weights.size(); ++j) {
      chi += weights[j] * params.phase(static_cast<long long>(j) * deg * params.q_phase());
    }
    values[idx] = chi * prod.value(w);
  }
  return StateFunctional(params, blocks, std::move(values));
}

FactorizationReport factorization_test(const StateFunctional& phi) {
  const int d = phi.params().d();
  FactorizationReport report;
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(phi.values().size()); ++idx) {
    const Word w = monomial_at(idx, d, phi.blocks());
    Complex prod{1.0, 0.0};
    const auto& letters = w.letters();
    std::size_t i = 0;
    while (i < letters.size()) {
      const int block = (letters[i].strand + 1) / 2;
      std::vector<Letter> local;
      for (; i < letters.size() && (letters[i].strand + 1) / 2 == block; ++i) {
        local.push_back(letters[i]);
      }
      prod *= phi.value(Word(std::move(local), d));
    }
    const double res = std::abs(phi.values()[idx] - prod);
    if (res > report.residual) {
      report.residual = res;
      report.worst = idx;
    }
  }
  return report;
}

}  // namespace pfbraid
