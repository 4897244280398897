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

#include <random>
#include <vector>

#include "pfbraid/algebra.hpp"
#include "pfbraid/expr.hpp"

namespace testsupport {

struct AstLimits {
  int depth = 3;
  /// Largest strand reachable after alpha offsets are applied.
  int max_strand = 4;
  /// Only shapes the evaluator accepts (small powers, invertible bases).
  bool evaluable = true;
};

/// Random tree in the shape the parser produces, so print/parse round trips.
pfbraid::expr::NodePtr random_ast(std::mt19937_64& rng, const AstLimits& limits);

/// Random word of raw letters on strands 1..max_strand with exponents in [-2d, 2d].
std::vector<pfbraid::RawLetter> random_word(std::mt19937_64& rng, int d, int max_strand,
                                            int length);

/// Random element with `terms` monomials on strands 1..max_strand.
pfbraid::AlgebraElement random_element(std::mt19937_64& rng, const pfbraid::AlgebraParams& params,
                                       int max_strand, int terms);

}  // namespace testsupport
