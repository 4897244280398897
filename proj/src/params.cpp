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

#include "pfbraid/params.hpp"

#include <cmath>
#include <numbers>

namespace pfbraid {

namespace {

std::shared_ptr<const std::vector<Complex>> make_table(int n) {
  auto table = std::make_shared<std::vector<Complex>>(n);
  for (int k = 0; k < n; ++k) {
    // Quarter turns are written exactly so that +-1 and +-i carry no rounding.
    if (4 * k % n == 0) {
      switch (4 * k / n) {
        case 0: (*table)[k] = {1.0, 0.0}; break;
        case 1: (*table)[k] = {0.0, 1.0}; break;
        case 2: (*table)[k] = {-1.0, 0.0}; break;
        default: (*table)[k] = {0.0, -1.0}; break;
      }
      continue;
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
    (*table)[k] = {std::cos(angle), std::sin(angle)};
  }
  return table;
}

}  // namespace

AlgebraParams::AlgebraParams(int d, ZetaBranch branch) : d_(d), branch_(branch) {
  if (d < 2 || d > kMaxOrder) {
    throw std::invalid_argument("algebra order d must lie in [2, " +
                                std::to_string(kMaxOrder) + "], got " + std::to_string(d));
  }
  if (branch == ZetaBranch::Negated && d % 2 != 0) {
    throw std::invalid_argument("-zeta is not a d^2-th root of unity for odd d = " +
                                std::to_string(d));
  }
  table_ = make_table(phase_denominator());
}

int AlgebraParams::zeta_phase() const {
  // exp(i pi (d+1)/d) = exp(2 pi i * d(d+1) / 2d^2); -zeta adds half a turn.
  const int standard = (d_ * (d_ + 1)) % phase_denominator();
  if (branch_ == ZetaBranch::Standard) return standard;
  return reduce_phase(standard + d_ * d_);
}

int AlgebraParams::reduce_phase(long long k) const {
  const long long n = phase_denominator();
  long long r = k % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

Complex AlgebraParams::phase(long long k) const { return (*table_)[reduce_phase(k)]; }

int AlgebraParams::reduce_exponent(long long e) const {
  long long r = e % d_;
  if (r < 0) r += d_;
  return static_cast<int>(r);
}

std::string AlgebraParams::describe() const {
  std::string s = "d=" + std::to_string(d_);
  if (branch_ == ZetaBranch::Negated) s += " (zeta negated)";
  return s;
}

void require_same_algebra(const AlgebraParams& a, const AlgebraParams& b) {
  if (a != b) {
    throw IncompatibleAlgebras("incompatible algebras: " + a.describe() + " vs " + b.describe());
  }
}

Charge::Charge(long long value, int d) : d_(d) {
  if (d < 1) throw std::invalid_argument("charge modulus must be positive");
  long long r = value % d;
  if (r < 0) r += d;
  value_ = static_cast<int>(r);
}

Charge Charge::operator+(const Charge& other) const {
  if (d_ != other.d_) throw IncompatibleAlgebras("adding charges of different moduli");
  return Charge(static_cast<long long>(value_) + other.value_, d_);
}

}  // namespace pfbraid
