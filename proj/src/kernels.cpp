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

#include "pfbraid/kernels.hpp"

#include <omp.h>

namespace pfbraid::kernels {

namespace {

void require_matching(const Matrix& m, const MonomialTable& table) {
  if (m.rows() != table.dim() || m.cols() != table.dim()) {
    throw std::invalid_argument("matrix size does not match the monomial table");
  }
}

// Exponent digits of every basis monomial, strand 1 first.
std::vector<int> exponent_digits(int d, int blocks, std::int64_t count) {
  const int n = 2 * blocks;
  std::vector<int> digits(count * n);
  for (std::int64_t idx = 0; idx < count; ++idx) {
    std::int64_t rest = idx;
    for (int s = n - 1; s >= 0; --s) {
      digits[idx * n + s] = static_cast<int>(rest % d);
      rest /= d;
    }
  }
  return digits;
}

// M^* N = q^p K with K the basis monomial of exponents n - m.
Complex gram_entry(const int* m, const int* nn, int n, int d, const AlgebraParams& params,
                   const std::vector<Complex>& values) {
  long long p = 0;
  std::int64_t k = 0;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) p -= static_cast<long long>(m[s]) * m[t];
    for (int t = 0; t < s; ++t) p += static_cast<long long>(m[s]) * nn[t];
    k = k * d + ((nn[s] - m[s]) % d + d) % d;
  }
  return params.phase(params.reduce_exponent(p) * static_cast<long long>(params.q_phase())) *
         values[k];
}

}  // namespace

int thread_count() { return omp_get_max_threads(); }

std::vector<Complex> expand_coefficients(const Matrix& x, const MonomialTable& table) {
  require_matching(x, table);
  const auto& params = table.params();
  const std::int64_t dim = table.dim();
  const std::int64_t count = table.count();
  std::vector<Complex> out(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < count; ++idx) {
    const int* t = table.targets(idx);
    const int* ph = table.phases(idx);
    Complex acc{};
    for (std::int64_t i = 0; i < dim; ++i) acc += std::conj(params.phase(ph[i])) * x(t[i], i);
    out[idx] = acc / static_cast<double>(dim);
  }
  return out;
}

Matrix densify(const std::vector<Complex>& coeffs, const MonomialTable& table) {
  if (static_cast<std::int64_t>(coeffs.size()) != table.count()) {
    throw std::invalid_argument("coefficient vector does not match the monomial table");
  }
  const auto& params = table.params();
  const std::int64_t dim = table.dim();
  const std::int64_t count = table.count();
  Matrix out = Matrix::Zero(dim, dim);
  // Columns are independent, so each thread owns whole columns.
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < dim; ++i) {
    for (std::int64_t idx = 0; idx < count; ++idx) {
      if (coeffs[idx] == Complex{}) continue;
      out(table.targets(idx)[i], i) += coeffs[idx] * params.phase(table.phases(idx)[i]);
    }
  }
  return out;
}

std::vector<Complex> trace_pairing(const Matrix& density, const MonomialTable& table) {
  require_matching(density, table);
  const auto& params = table.params();
  const std::int64_t dim = table.dim();
  const std::int64_t count = table.count();
  std::vector<Complex> out(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < count; ++idx) {
    const int* t = table.targets(idx);
    const int* ph = table.phases(idx);
    Complex acc{};
    for (std::int64_t r = 0; r < dim; ++r) acc += density(r, t[r]) * params.phase(ph[r]);
    out[idx] = acc;
  }
  return out;
}

Matrix gram_matrix(const std::vector<Complex>& values, const AlgebraParams& params, int blocks) {
  const int d = params.d();
  const std::int64_t count = monomial_count(d, blocks);
  if (static_cast<std::int64_t>(values.size()) != count) {
    throw std::invalid_argument("value vector does not match the monomial basis");
  }
  const int n = 2 * blocks;
  const std::vector<int> digits = exponent_digits(d, blocks, count);
  Matrix g(count, count);
#pragma omp parallel for schedule(static)
  for (std::int64_t col = 0; col < count; ++col) {
    for (std::int64_t row = 0; row < count; ++row) {
      g(row, col) = gram_entry(&digits[row * n], &digits[col * n], n, d, params, values);
    }
  }
  return g;
}

namespace serial {

std::vector<Complex> expand_coefficients(const Matrix& x, const MonomialTable& table) {
  require_matching(x, table);
  const auto& params = table.params();
  const std::int64_t dim = table.dim();
  std::vector<Complex> out(table.count());
  for (std::int64_t idx = 0; idx < table.count(); ++idx) {
    Complex acc{};
    for (std::int64_t i = 0; i < dim; ++i) {
      acc += std::conj(params.phase(table.phases(idx)[i])) * x(table.targets(idx)[i], i);
    }
    out[idx] = acc / static_cast<double>(dim);
  }
  return out;
}

Matrix densify(const std::vector<Complex>& coeffs, const MonomialTable& table) {
  if (static_cast<std::int64_t>(coeffs.size()) != table.count()) {
    throw std::invalid_argument("coefficient vector does not match the monomial table");
  }
  const auto& params = table.params();
  const std::int64_t dim = table.dim();
  Matrix out = Matrix::Zero(dim, dim);
  for (std::int64_t idx = 0; idx < table.count(); ++idx) {
    if (coeffs[idx] == Complex{}) continue;
    for (std::int64_t i = 0; i < dim; ++i) {
      out(table.targets(idx)[i], i) += coeffs[idx] * params.phase(table.phases(idx)[i]);
    }
  }
  return out;
}

std::vector<Complex> trace_pairing(const Matrix& density, const MonomialTable& table) {
  require_matching(density, table);
  const auto& params = table.params();
  const std::int64_t dim = table.dim();
  std::vector<Complex> out(table.count());
  for (std::int64_t idx = 0; idx < table.count(); ++idx) {
    Complex acc{};
    for (std::int64_t r = 0; r < dim; ++r) {
      acc += density(r, table.targets(idx)[r]) * params.phase(table.phases(idx)[r]);
    }
    out[idx] = acc;
  }
  return out;
}

Matrix gram_matrix(const std::vector<Complex>& values, const AlgebraParams& params, int blocks) {
  const int d = params.d();
  const std::int64_t count = monomial_count(d, blocks);
  if (static_cast<std::int64_t>(values.size()) != count) {
    throw std::invalid_argument("value vector does not match the monomial basis");
  }
  const int n = 2 * blocks;
  const std::vector<int> digits = exponent_digits(d, blocks, count);
  Matrix g(count, count);
  for (std::int64_t row = 0; row < count; ++row) {
    for (std::int64_t col = 0; col < count; ++col) {
      g(row, col) = gram_entry(&digits[row * n], &digits[col * n], n, d, params, values);
    }
  }
  return g;
}

}  // namespace serial

}  // namespace pfbraid::kernels
