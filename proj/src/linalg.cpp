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

#include "pfbraid/linalg.hpp"

#include <algorithm>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace pfbraid::linalg {

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double hermiticity_defect(const Matrix& m) { return (m - m.adjoint()).norm(); }

Matrix hermitian_part(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

double min_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

Range psd_range(const Matrix& m, double relative_cutoff) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m));
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double top = ev.size() > 0 ? ev(ev.size() - 1) : 0.0;
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > relative_cutoff * top) keep.push_back(i);
  }
  Range r;
  r.basis.resize(m.rows(), static_cast<Eigen::Index>(keep.size()));
  r.eigenvalues.resize(static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    r.basis.col(k) = es.eigenvectors().col(keep[k]);
    r.eigenvalues(k) = ev(keep[k]);
  }
  return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix psd_nullspace(const Matrix& h, double tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(h));
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.size() > 0 ? ev(ev.size() - 1) : 0.0);
  Eigen::Index n = 0;
  while (n < ev.size() && ev(n) <= tol * scale) ++n;
  return es.eigenvectors().leftCols(n);
}

}  // namespace pfbraid::linalg
