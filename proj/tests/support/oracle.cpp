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

#include "oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <variant>

namespace oracle {

namespace ex = pfbraid::expr;

Complex q(int d) { return std::polar(1.0, 2.0 * std::numbers::pi / d); }

Complex zeta(int d) { return std::polar(1.0, std::numbers::pi * (d + 1) / d); }

Complex omega(int d) {
  Complex sum{};
  for (long long j = 0; j < d; ++j) {
    const long long e = (j * j) % (2LL * d * d);
    sum += std::polar(1.0, std::numbers::pi * (d + 1) * static_cast<double>(e) / d);
  }
  return sum / std::sqrt(static_cast<double>(d));
}

Mat clock(int d) {
  Mat z = Mat::Zero(d, d);
  for (int k = 0; k < d; ++k) z(k, k) = std::pow(q(d), k);
  return z;
}

Mat shift(int d) {
  Mat x = Mat::Zero(d, d);
  for (int k = 0; k < d; ++k) x((k + 1) % d, k) = 1.0;
  return x;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Mat identity(int d, int blocks) {
  const auto n = static_cast<Eigen::Index>(std::pow(d, blocks));
  return Mat::Identity(n, n);
}

Mat generator(int d, int blocks, int j) {
  if (j < 1 || j > 2 * blocks) throw std::out_of_range("oracle: strand out of range");
  const int site = (j + 1) / 2;
  const Mat zinv = clock(d).adjoint();
  Mat out = Mat::Identity(1, 1);
  for (int s = 1; s <= blocks; ++s) {
    Mat local;
    if (s < site) {
      local = zinv;
    } else if (s == site) {
      local = j % 2 == 1 ? shift(d) : Mat(std::pow(zeta(d), d - 1) * shift(d) * zinv);
    } else {
      local = Mat::Identity(d, d);
    }
    out = kron(out, local);
  }
  return out;
}

namespace {

Mat unitary_power(const Mat& u, long long e) {
  Mat base = e >= 0 ? u : Mat(u.adjoint());
  Mat out = Mat::Identity(u.rows(), u.cols());
  for (long long i = 0; i < (e >= 0 ? e : -e); ++i) out = out * base;
  return out;
}

Mat general_power(const Mat& a, long long e) {
  Mat base = e >= 0 ? a : Mat(a.inverse());
  Mat out = Mat::Identity(a.rows(), a.cols());
  for (long long i = 0; i < (e >= 0 ? e : -e); ++i) out = out * base;
  return out;
}

}  // namespace

Mat word(int d, int blocks, const std::vector<std::pair<int, long long>>& letters) {
  Mat out = identity(d, blocks);
  for (const auto& [j, e] : letters) out = out * unitary_power(generator(d, blocks, j), e);
  return out;
}

Mat two_string(int d, int blocks, int k) {
  const Mat ck = generator(d, blocks, k);
  const Mat next_inv = generator(d, blocks, k + 1).adjoint();
  Mat sum = Mat::Zero(ck.rows(), ck.cols());
  for (int i = 0; i < d; ++i) sum += unitary_power(ck, i) * unitary_power(next_inv, i);
  return std::sqrt(omega(d)) / std::sqrt(static_cast<double>(d)) * sum;
}

Mat four_string(int d, int blocks, int j) {
  const Mat forward = two_string(d, blocks, 2 * j) * two_string(d, blocks, 2 * j - 1) *
                      two_string(d, blocks, 2 * j + 1) * two_string(d, blocks, 2 * j);
  return forward.adjoint();
}

namespace {

struct Eval {
  int d;
  int blocks;
  int offset;

  Mat at(const ex::Node& n, int extra = 0) const {
    return std::visit(Eval{d, blocks, offset + extra}, n.v);
  }
  Mat scalar(Complex z) const { return z * identity(d, blocks); }

  Mat operator()(const ex::Sum& s) const {
    Mat out = Mat::Zero(identity(d, blocks).rows(), identity(d, blocks).cols());
    for (const auto& [sign, t] : s.terms) out += static_cast<double>(sign) * at(*t);
    return out;
  }
  Mat operator()(const ex::Scaled& s) const { return at(*s.scalar) * at(*s.body); }
  Mat operator()(const ex::Product& p) const {
    Mat out = identity(d, blocks);
    for (const auto& f : p.factors) out = out * at(*f);
    return out;
  }
  Mat operator()(const ex::Gen& g) const {
    return unitary_power(generator(d, blocks, g.strand + offset), g.exponent);
  }
  Mat operator()(const ex::Braid& b) const {
    return unitary_power(four_string(d, blocks, b.index + offset / 2), b.exponent);
  }
  Mat operator()(const ex::Alpha& a) const { return at(*a.body, 2 * a.power); }
  Mat operator()(const ex::Ad& a) const {
    Mat u = identity(d, blocks);
    for (const auto& l : a.word) {
      u = u * unitary_power(four_string(d, blocks, l.index + offset / 2), l.exponent);
    }
    return u * at(*a.body) * u.adjoint();
  }
  Mat operator()(const ex::Star& s) const { return at(*s.body).adjoint(); }
  Mat operator()(const ex::Power& p) const { return general_power(at(*p.base), p.exponent); }
  Mat operator()(const ex::NamedScalar& n) const {
    switch (n.which) {
      case ex::Named::Q: return scalar(q(d));
      case ex::Named::Zeta: return scalar(zeta(d));
      case ex::Named::Omega: return scalar(omega(d));
      case ex::Named::I: return scalar(Complex{0.0, 1.0});
    }
    return scalar(0.0);
  }
  Mat operator()(const ex::Literal& l) const { return scalar(l.value); }
};

}  // namespace

Mat evaluate(const ex::Node& node, int d, int blocks) { return Eval{d, blocks, 0}.at(node); }

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

int p0_brute_force(int d) {
  for (int k = 1; k <= d; ++k) {
    if ((k * k) % d == 0) return k;
  }
  return d;
}

bool square_free_by_trial_division(int d) {
  for (int p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace oracle
