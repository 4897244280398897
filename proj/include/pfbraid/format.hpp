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

#include <string>

#include "pfbraid/algebra.hpp"

namespace pfbraid {

/// Shortest decimal text that reads back to the same double.
std::string format_real(double x);

/// "a+bi" literal text understood by the expression parser.  Requires a
/// non-negative real part; a zero imaginary part prints as a plain decimal.
std::string format_complex_literal(Complex z);

/// Coefficient prefix used when printing elements: "" for 1, "-" for -1,
/// "q^k" / "zeta q^k" for exact roots of unity, otherwise a decimal or
/// complex literal.  A leading '-' marks a negated coefficient.
std::string format_coefficient(const Coefficient& c, const AlgebraParams& params);

}  // namespace pfbraid
