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

#include "pfbraid/matrix_rep.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "pfbraid/kernels.hpp"

namespace pfbraid {

std::int64_t checked_dimension(int d, int blocks) {
  if (blocks < 1) throw std::invalid_argument("block count must be at least 1");
  std::int64_t dim = 1;
  for (int i = 0; i < blocks; ++i) {
    dim *= d;
    if (dim > kMaxDimension) {
      throw DimensionCapExceeded("dimension d^m = " + std::to_string(d) + "^" +
                                 std::to_string(blocks) + " exceeds the cap of " +
                                 std::to_string(kMaxDimension));
    }
  }
  return dim;
}

// --- Operator -------------------------------------------------------------

Operator::Operator(AlgebraParams params, int blocks, Matrix entries)
    : params_(std::move(params)), blocks_(blocks), entries_(std::move(entries)) {
  const auto dim = checked_dimension(params_.d(), blocks_);
  if (entries_.rows() != dim || entries_.cols() != dim) {
    throw std::invalid_argument("operator on " + std::to_string(blocks_) +
                                " blocks must be " + std::to_string(dim) + "x" +
                                std::to_string(dim));
  }
  if (!entries_.allFinite()) throw std::invalid_argument("operator entries must be finite");
}

Operator Operator::identity(const AlgebraParams& params, int blocks) {
  const auto dim = checked_dimension(params.d(), blocks);
  return Operator(params, blocks, Matrix::Identity(dim, dim));
}

Operator Operator::zero(const AlgebraParams& params, int blocks) {
  const auto dim = checked_dimension(params.d(), blocks);
  return Operator(params, blocks, Matrix::Zero(dim, dim));
}

Operator Operator::adjoint() const { return Operator(params_, blocks_, entries_.adjoint()); }

void Operator::require_compatible(const Operator& other) const {
  require_same_algebra(params_, other.params_);
  if (blocks_ != other.blocks_) {
    throw std::invalid_argument("operators act on different block counts");
  }
}

Operator Operator::operator*(const Operator& other) const {
  require_compatible(other);
  return Operator(params_, blocks_, entries_ * other.entries_);
}

Operator Operator::operator+(const Operator& other) const {
  require_compatible(other);
  return Operator(params_, blocks_, entries_ + other.entries_);
}

Operator Operator::operator-(const Operator& other) const {
  require_compatible(other);
  return Operator(params_, blocks_, entries_ - other.entries_);
}

Operator Operator::operator*(Complex s) const { return Operator(params_, blocks_, entries_ * s); }

// --- phased permutations --------------------------------------------------

WeylOperator WeylOperator::compose(const WeylOperator& rhs, const AlgebraParams& params) const {
  WeylOperator out;
  const std::size_t n = rhs.target.size();
  out.target.resize(n);
  out.phase.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int mid = rhs.target[i];
    out.target[i] = target[mid];
    out.phase[i] = params.reduce_phase(static_cast<long long>(rhs.phase[i]) + phase[mid]);
  }
  return out;
}

Matrix WeylOperator::dense(const AlgebraParams& params) const {
  const auto n = static_cast<Eigen::Index>(target.size());
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(target[i], i) = params.phase(phase[i]);
  return m;
}

WeylOperator weyl_identity(const AlgebraParams& params, int blocks) {
  const auto dim = checked_dimension(params.d(), blocks);
  WeylOperator w;
  w.target.resize(dim);
  w.phase.assign(dim, 0);
  for (std::int64_t i = 0; i < dim; ++i) w.target[i] = static_cast<int>(i);
  return w;
}

WeylOperator weyl_generator(int strand, int blocks, const AlgebraParams& params) {
  if (strand < 1 || strand > 2 * blocks) {
    throw SupportOutOfRange("strand " + std::to_string(strand) + " needs at least " +
                            std::to_string((strand + 1) / 2) + " blocks, have " +
                            std::to_string(blocks));
  }
  const int d = params.d();
  const auto dim = checked_dimension(d, blocks);
  const int site = (strand + 1) / 2;
  const bool even = strand % 2 == 0;
  std::int64_t stride = 1;
  for (int s = site; s < blocks; ++s) stride *= d;

  WeylOperator w;
  w.target.resize(dim);
  w.phase.resize(dim);
  const long long zeta_part = even ? static_cast<long long>(d - 1) * params.zeta_phase() : 0;
  for (std::int64_t i = 0; i < dim; ++i) {
    long long prefix = 0;
    std::int64_t rest = i;
    std::int64_t place = dim;
    for (int s = 1; s < site; ++s) {
      place /= d;
      prefix += rest / place;
      rest %= place;
    }
    const int k = static_cast<int>((i / stride) % d);
    const std::int64_t shifted = i + (k == d - 1 ? -(d - 1) * stride : stride);
    const long long q_power = -prefix - (even ? k : 0);
    w.target[i] = static_cast<int>(shifted);
    w.phase[i] = params.reduce_phase(q_power * params.q_phase() + zeta_part);
  }
  return w;
}

WeylOperator weyl_word(const Word& word, int blocks, const AlgebraParams& params) {
  WeylOperator out = weyl_identity(params, blocks);
  for (const auto& letter : word.letters()) {
    const WeylOperator g = weyl_generator(letter.strand, blocks, params);
    for (int e = 0; e < letter.exponent; ++e) out = out.compose(g, params);
  }
  return out;
}

std::pair<Operator, Operator> clock_shift(const AlgebraParams& params) {
  const int d = params.d();
  Matrix z = Matrix::Zero(d, d);
  Matrix x = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    z(k, k) = params.phase(static_cast<long long>(k) * params.q_phase());
    x((k + 1) % d, k) = 1.0;
  }
  return {Operator(params, 1, std::move(z)), Operator(params, 1, std::move(x))};
}

Operator represent_generator(int strand, int blocks, const AlgebraParams& params) {
  return Operator(params, blocks, weyl_generator(strand, blocks, params).dense(params));
}

Operator represent(const AlgebraElement& a, int blocks) {
  const auto& params = a.params();
  const int needed = a.blocks_required();
  if (needed > blocks) {
    throw SupportOutOfRange("element reaches strand " + std::to_string(a.max_strand()) +
                            " and needs m >= " + std::to_string(needed) + " blocks, have " +
                            std::to_string(blocks));
  }
  const auto dim = checked_dimension(params.d(), blocks);
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& [word, coeff] : a.terms()) {
    const WeylOperator w = weyl_word(word, blocks, params);
    for (std::int64_t i = 0; i < dim; ++i) {
      m(w.target[i], i) +=
          coeff.base * params.phase(static_cast<long long>(coeff.phase) + w.phase[i]);
    }
  }
  return Operator(params, blocks, std::move(m));
}

// --- monomial basis -------------------------------------------------------

std::int64_t monomial_count(int d, int blocks) {
  const auto dim = checked_dimension(d, blocks);
  return dim * dim;
}

Word monomial_at(std::int64_t index, int d, int blocks) {
  const int n = 2 * blocks;
  std::vector<Letter> letters;
  std::vector<int> digits(n);
  for (int s = n; s >= 1; --s) {
    digits[s - 1] = static_cast<int>(index % d);
    index /= d;
  }
  if (index != 0) throw std::out_of_range("monomial index out of range");
  for (int s = 1; s <= n; ++s) {
    if (digits[s - 1] != 0) letters.push_back({s, digits[s - 1]});
  }
  return Word(std::move(letters), d);
}

std::int64_t monomial_index(const Word& word, int d, int blocks) {
  const int n = 2 * blocks;
  if (word.max_strand() > n) {
    throw SupportOutOfRange("word reaches strand " + std::to_string(word.max_strand()) +
                            " beyond 2m = " + std::to_string(n));
  }
  std::int64_t index = 0;
  for (int s = 1; s <= n; ++s) index = index * d + word.exponent(s);
  return index;
}

MonomialTable::MonomialTable(const AlgebraParams& params, int blocks)
    : params_(params), blocks_(blocks) {
  dim_ = checked_dimension(params.d(), blocks);
  count_ = dim_ * dim_;
  if (count_ * dim_ > kMaxEntries) {
    throw DimensionCapExceeded("monomial table for d=" + std::to_string(params.d()) + ", m=" +
                               std::to_string(blocks) + " exceeds its size cap");
  }
  target_.resize(count_ * dim_);
  phase_.resize(count_ * dim_);
  adjoint_index_.resize(count_);
  adjoint_phase_.resize(count_);
  const int d = params.d();

#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t idx = 0; idx < count_; ++idx) {
    const Word w = monomial_at(idx, d, blocks);
    const WeylOperator op = weyl_word(w, blocks, params);
    std::copy(op.target.begin(), op.target.end(), target_.begin() + idx * dim_);
    std::copy(op.phase.begin(), op.phase.end(), phase_.begin() + idx * dim_);

    std::vector<RawLetter> inverse;
    const auto& letters = w.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      inverse.push_back({it->strand, -static_cast<long long>(it->exponent)});
    }
    const Monomial star = normalize(inverse, params);
    adjoint_index_[idx] = monomial_index(star.word, d, blocks);
    adjoint_phase_[idx] = star.coefficient.phase;
  }
}

std::shared_ptr<const MonomialTable> MonomialTable::get(const AlgebraParams& params, int blocks) {
  using Key = std::tuple<int, int, int>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const MonomialTable>> cache;
  const Key key{params.d(), static_cast<int>(params.branch()), blocks};
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const MonomialTable>(params, blocks);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.try_emplace(key, std::move(table)).first->second;
}

AlgebraElement expand(const Operator& op, double prune) {
  const auto table = MonomialTable::get(op.params(), op.blocks());
  const std::vector<Complex> coeffs = kernels::expand_coefficients(op.matrix(), *table);
  AlgebraElement out(op.params());
  for (std::int64_t idx = 0; idx < table->count(); ++idx) {
    if (std::abs(coeffs[idx]) > prune) {
      out.add_term(monomial_at(idx, op.params().d(), op.blocks()), Coefficient{coeffs[idx], 0});
    }
  }
  return out;
}

GaussPhase gauss_phase(const AlgebraParams& params) {
  const int d = params.d();
  Complex sum{};
  for (int j = 0; j < d; ++j) {
    sum += params.phase(static_cast<long long>(j) * j * params.zeta_phase());
  }
  const Complex omega = sum / std::sqrt(static_cast<double>(d));
  return GaussPhase{omega, std::sqrt(omega)};
}

}  // namespace pfbraid
