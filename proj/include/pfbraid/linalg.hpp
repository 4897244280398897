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

#include "pfbraid/matrix_rep.hpp"

namespace pfbraid::linalg {

/// Largest singular value.
double spectral_norm(const Matrix& m);

/// Frobenius norm of m - m^*.
double hermiticity_defect(const Matrix& m);

/// (m + m^*) / 2.
Matrix hermitian_part(const Matrix& m);

/// Smallest eigenvalue of the Hermitian part of m.
double min_eigenvalue(const Matrix& m);

/// Range projector data of a PSD matrix: eigenvectors whose eigenvalues exceed
/// `relative_cutoff` times the largest eigenvalue, and those eigenvalues.
struct Range {
  Matrix basis;
  Eigen::VectorXd eigenvalues;
};

Range psd_range(const Matrix& m, double relative_cutoff);

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Orthonormal basis (columns) of the null space of a Hermitian PSD matrix,
/// eigenvalues at most `tol` times max(1, largest eigenvalue).
Matrix psd_nullspace(const Matrix& h, double tol);

}  // namespace pfbraid::linalg
