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

#include "pfbraid/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace pfbraid {

std::string format_real(double x) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) return std::to_string(x);
  return std::string(buf.data(), ptr);
}

std::string format_complex_literal(Complex z) {
  if (z.imag() == 0.0) return format_real(z.real() == 0.0 ? 0.0 : z.real());
  std::string out = format_real(z.real() == 0.0 ? 0.0 : z.real());
  out += z.imag() < 0 ? "-" : "+";
  out += format_real(std::abs(z.imag()));
  out += "i";
  return out;
}

namespace {

std::string phase_text(int phase, const AlgebraParams& params) {
  const int two_d = 2 * params.d();
  auto q_power = [&](int k) -> std::string {
    k %= params.d();
    if (k == 0) return "";
    return k == 1 ? "q" : "q^" + std::to_string(k);
  };
  if (phase % two_d == 0) return q_power(phase / two_d);
  const int rest = params.reduce_phase(static_cast<long long>(phase) - params.zeta_phase());
  if (rest % two_d == 0) {
    const std::string q = q_power(rest / two_d);
    return q.empty() ? "zeta" : "zeta " + q;
  }
  return {};
}

}  // namespace

std::string format_coefficient(const Coefficient& c, const AlgebraParams& params) {
  Complex base = c.base;
  int phase = params.reduce_phase(c.phase);
  if (phase != 0 && base.imag() == 0.0) {
    const std::string roots = phase_text(phase, params);
    if (!roots.empty()) {
      const double r = base.real();
      if (r == 1.0) return roots;
      if (r == -1.0) return "-" + roots;
      if (r < 0) return "-" + format_real(-r) + " " + roots;
      return format_real(r) + " " + roots;
    }
  }
  const Complex z = realize(Coefficient{base, phase}, params);
  if (z == Complex{1.0, 0.0}) return "";
  if (z == Complex{-1.0, 0.0}) return "-";
  if (z.real() < 0.0) {
    return "-" + format_complex_literal(-z);
  }
  return format_complex_literal(z);
}

}  // namespace pfbraid
