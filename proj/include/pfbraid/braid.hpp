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
#include <vector>

#include "pfbraid/algebra.hpp"
#include "pfbraid/matrix_rep.hpp"

namespace pfbraid {

/// Composition order of the four two-string braids inside b_j.
///   Adjoint: b_j = (B_{2j} B_{2j-1} B_{2j+1} B_{2j})^*, the exchange braid.
///   Forward: B_{2j} B_{2j-1} B_{2j+1} B_{2j}, kept as a regression witness.
enum class FourStringOrder { Adjoint, Forward };

/// Two-string braid B_k = omega^{1/2} d^{-1/2} sum_i c_k^i c_{k+1}^{-i}.
AlgebraElement two_string_braid_element(int k, const AlgebraParams& params);

/// Matrix of B_k on m blocks; requires k + 1 <= 2m.
Operator two_string_braid(int k, int blocks, const AlgebraParams& params);

/// Four-string braid b_j as an element supported on strands 2j-1 .. 2j+2.
AlgebraElement four_string_braid_element(int j, const AlgebraParams& params,
                                         FourStringOrder order = FourStringOrder::Adjoint);

/// b_index^{sign}.
struct BraidLetter {
  int index;
  int sign;

  bool operator==(const BraidLetter&) const = default;
};

class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<BraidLetter> letters);

  const std::vector<BraidLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  /// max index + 1, and 1 for the empty word.
  int blocks_required() const;

  /// "b1 b2' b1".
  std::string to_string() const;

  bool operator==(const BraidWord&) const = default;

 private:
  std::vector<BraidLetter> letters_;
};

/// A braid word with its unitary at a fixed truncation.
struct BraidUnitary {
  BraidWord word;
  Operator op;
};

/// b_j realized on m blocks; requires j + 1 <= m.
BraidUnitary four_string_braid(int j, int blocks, const AlgebraParams& params,
                               FourStringOrder order = FourStringOrder::Adjoint);

/// Product of the letters of `word`, left to right, on m blocks.
BraidUnitary realize(const BraidWord& word, int blocks, const AlgebraParams& params,
                     FourStringOrder order = FourStringOrder::Adjoint);

/// Ad(b)(a) = b a b^* through the matrix representation and re-expansion in
/// the monomial basis.  Coefficients with magnitude <= prune are dropped.
AlgebraElement adjoint_action(const BraidUnitary& b, const AlgebraElement& a,
                              double prune = 1e-12);

/// The braid word as an algebra element (product of b_j^{+-1}).
AlgebraElement braid_element(const BraidWord& word, const AlgebraParams& params,
                             FourStringOrder order = FourStringOrder::Adjoint);

/// Ad(word)(a) computed symbolically, without matrices.
AlgebraElement adjoint_action_symbolic(const BraidWord& word, const AlgebraElement& a,
                                       FourStringOrder order = FourStringOrder::Adjoint);

/// alpha^k: strand j -> j + 2k.
AlgebraElement shift_alpha(const AlgebraElement& a, int k = 1);

/// Symbolic product with relative pruning of float noise.
AlgebraElement multiply_pruned(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace pfbraid
