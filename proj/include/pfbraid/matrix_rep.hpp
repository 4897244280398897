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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pfbraid/algebra.hpp"

namespace pfbraid {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Largest operator dimension d^m accepted anywhere in the library.
inline constexpr std::int64_t kMaxDimension = 4096;

/// Raised when a requested truncation exceeds a size cap.
class DimensionCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Raised when an element needs more blocks than the truncation provides.
class SupportOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// d^m, checked against kMaxDimension.
std::int64_t checked_dimension(int d, int blocks);

/// Dense d^m x d^m matrix acting on m qudit blocks.
class Operator {
 public:
  Operator(AlgebraParams params, int blocks, Matrix entries);

  static Operator identity(const AlgebraParams& params, int blocks);
  static Operator zero(const AlgebraParams& params, int blocks);

  const AlgebraParams& params() const { return params_; }
  int blocks() const { return blocks_; }
  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }

  Operator adjoint() const;
  Complex trace() const { return entries_.trace(); }

  Operator operator*(const Operator& other) const;
  Operator operator+(const Operator& other) const;
  Operator operator-(const Operator& other) const;
  Operator operator*(Complex s) const;

 private:
  void require_compatible(const Operator& other) const;

  AlgebraParams params_;
  int blocks_;
  Matrix entries_;
};

/// Phased permutation: column i has the single entry exp(2 pi i phase[i]/N)
/// in row target[i].  Every represented monomial has this shape.
struct WeylOperator {
  std::vector<int> target;
  std::vector<int> phase;

  /// Product (*this) * rhs.
  WeylOperator compose(const WeylOperator& rhs, const AlgebraParams& params) const;
  Matrix dense(const AlgebraParams& params) const;
};

/// Identity phased permutation on d^m basis states.
WeylOperator weyl_identity(const AlgebraParams& params, int blocks);

/// Image of c_strand as a phased permutation.
WeylOperator weyl_generator(int strand, int blocks, const AlgebraParams& params);

/// Image of a normal-form word (coefficient 1).
WeylOperator weyl_word(const Word& word, int blocks, const AlgebraParams& params);

/// Clock Z = diag(q^k) and shift X|k> = |k+1 mod d> on one block.
std::pair<Operator, Operator> clock_shift(const AlgebraParams& params);

/// Jordan-Wigner image of c_j on m blocks; throws SupportOutOfRange unless
/// 1 <= j <= 2m.
Operator represent_generator(int strand, int blocks, const AlgebraParams& params);

/// Linear extension of represent_generator; throws SupportOutOfRange naming the
/// required block count when a strand exceeds 2m.
Operator represent(const AlgebraElement& a, int blocks);

// Monomial basis of PF_{2m}: exponent vectors (e_1, ..., e_{2m}) read as a
// mixed-radix number with strand 1 most significant.

std::int64_t monomial_count(int d, int blocks);
Word monomial_at(std::int64_t index, int d, int blocks);
std::int64_t monomial_index(const Word& word, int d, int blocks);

/// Precomputed phased permutations of every basis monomial at one truncation.
/// Shared by the expansion, densification and state kernels.
class MonomialTable {
 public:
  /// Largest count * dim accepted (entries stored).
  static constexpr std::int64_t kMaxEntries = std::int64_t{1} << 26;

  MonomialTable(const AlgebraParams& params, int blocks);

  const AlgebraParams& params() const { return params_; }
  int blocks() const { return blocks_; }
  std::int64_t dim() const { return dim_; }
  std::int64_t count() const { return count_; }

  const int* targets(std::int64_t monomial) const { return target_.data() + monomial * dim_; }
  const int* phases(std::int64_t monomial) const { return phase_.data() + monomial * dim_; }

  /// Index of M^* in the basis and the phase p with M^* = exp(2 pi i p/N) M'.
  std::int64_t adjoint_index(std::int64_t monomial) const { return adjoint_index_[monomial]; }
  int adjoint_phase(std::int64_t monomial) const { return adjoint_phase_[monomial]; }

  /// Cached table for (params, blocks).
  static std::shared_ptr<const MonomialTable> get(const AlgebraParams& params, int blocks);

 private:
  AlgebraParams params_;
  int blocks_;
  std::int64_t dim_;
  std::int64_t count_;
  std::vector<int> target_;
  std::vector<int> phase_;
  std::vector<std::int64_t> adjoint_index_;
  std::vector<int> adjoint_phase_;
};

/// Monomial-basis expansion X = sum_M x_M M with x_M = tr(M^* X)/d^m.
/// Coefficients with magnitude <= prune are dropped.
AlgebraElement expand(const Operator& op, double prune = 0.0);

/// omega = d^{-1/2} sum_j zeta^{j^2} and its principal square root.
struct GaussPhase {
  Complex omega;
  Complex omega_sqrt;
};

GaussPhase gauss_phase(const AlgebraParams& params);

}  // namespace pfbraid
