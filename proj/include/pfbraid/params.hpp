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

#include <complex>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfbraid {

using Complex = std::complex<double>;

/// Raised when two objects built over different algebras are combined.
class IncompatibleAlgebras : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Choice of the square root zeta of q.  `Standard` is exp(i*pi*(d+1)/d);
/// `Negated` is -zeta, which is also a valid choice (zeta^{d^2} = 1) when d is
/// even.
enum class ZetaBranch { Standard, Negated };

/// Order d of the parafermion algebra together with its roots of unity.
///
/// Every root of unity that appears in the algebra (q, zeta, and products of
/// them) is an integer power of exp(2*pi*i/N) with N = 2 d^2.  Phases are
/// carried as integer exponents modulo N and only turned into floating point
/// numbers through `phase()`, which reads a precomputed table.
class AlgebraParams {
 public:
  static constexpr int kMaxOrder = 64;

  explicit AlgebraParams(int d, ZetaBranch branch = ZetaBranch::Standard);

  int d() const { return d_; }
  ZetaBranch branch() const { return branch_; }

  /// N = 2 d^2.
  int phase_denominator() const { return 2 * d_ * d_; }

  /// Exponent of q = exp(2 pi i / d) over N.
  int q_phase() const { return 2 * d_; }

  /// Exponent of zeta over N; zeta^2 = q and zeta^{d^2} = 1.
  int zeta_phase() const;

  /// Reduces an arbitrary phase exponent into [0, N).
  int reduce_phase(long long k) const;

  /// exp(2 pi i k / N).
  Complex phase(long long k) const;

  Complex q() const { return phase(q_phase()); }
  Complex zeta() const { return phase(zeta_phase()); }

  /// Reduces an exponent of a generator into [0, d).
  int reduce_exponent(long long e) const;

  bool operator==(const AlgebraParams& other) const {
    return d_ == other.d_ && branch_ == other.branch_;
  }
  bool operator!=(const AlgebraParams& other) const { return !(*this == other); }

  std::string describe() const;

 private:
  int d_;
  ZetaBranch branch_;
  std::shared_ptr<const std::vector<Complex>> table_;
};

/// Throws IncompatibleAlgebras unless `a == b`.
void require_same_algebra(const AlgebraParams& a, const AlgebraParams& b);

/// Z_d-valued charge (degree).
class Charge {
 public:
  Charge(long long value, int d);

  int value() const { return value_; }
  int modulus() const { return d_; }
  bool is_neutral() const { return value_ == 0; }

  Charge operator+(const Charge& other) const;
  Charge operator-() const { return Charge(-static_cast<long long>(value_), d_); }
  Charge operator*(long long k) const { return Charge(static_cast<long long>(value_) * k, d_); }

  bool operator==(const Charge& other) const {
    return value_ == other.value_ && d_ == other.d_;
  }
  bool operator!=(const Charge& other) const { return !(*this == other); }
  bool operator<(const Charge& other) const { return value_ < other.value_; }

 private:
  int value_;
  int d_;
};

}  // namespace pfbraid
