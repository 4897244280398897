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

#include "pfbraid/braid.hpp"

#include <algorithm>
#include <cmath>

namespace pfbraid {

namespace {

constexpr double kRelativePrune = 1e-13;

void require_index(int j, int blocks) {
  if (j < 1 || j + 1 > blocks) {
    throw SupportOutOfRange("braid b" + std::to_string(j) + " needs " + std::to_string(j + 1) +
                            " blocks, have " + std::to_string(blocks));
  }
}

}  // namespace

AlgebraElement multiply_pruned(const AlgebraElement& a, const AlgebraElement& b) {
  const double scale = a.l1_norm() * b.l1_norm();
  return multiply(a, b).pruned(kRelativePrune * scale);
}

AlgebraElement two_string_braid_element(int k, const AlgebraParams& params) {
  if (k < 1) throw std::invalid_argument("two-string braid index must be >= 1");
  const int d = params.d();
  const Complex scale = gauss_phase(params).omega_sqrt / std::sqrt(static_cast<double>(d));
  AlgebraElement out(params);
  for (int i = 0; i < d; ++i) {
    const RawLetter word[2] = {{k, i}, {k + 1, -i}};
    const Monomial m = normalize(word, params, scale);
    out.add_term(m.word, m.coefficient);
  }
  return out;
}

Operator two_string_braid(int k, int blocks, const AlgebraParams& params) {
  if (k < 1 || k + 1 > 2 * blocks) {
    throw SupportOutOfRange("two-string braid on strands " + std::to_string(k) + "," +
                            std::to_string(k + 1) + " needs " + std::to_string((k + 2) / 2) +
                            " blocks, have " + std::to_string(blocks));
  }
  return represent(two_string_braid_element(k, params), blocks);
}

AlgebraElement four_string_braid_element(int j, const AlgebraParams& params,
                                         FourStringOrder order) {
  if (j < 1) throw std::invalid_argument("four-string braid index must be >= 1");
  const AlgebraElement b_even = two_string_braid_element(2 * j, params);
  const AlgebraElement b_left = two_string_braid_element(2 * j - 1, params);
  const AlgebraElement b_right = two_string_braid_element(2 * j + 1, params);
  AlgebraElement forward =
      multiply_pruned(multiply_pruned(multiply_pruned(b_even, b_left), b_right), b_even);
  if (order == FourStringOrder::Forward) return forward;
  return adjoint(forward);
}

BraidWord::BraidWord(std::vector<BraidLetter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    if (l.index < 1) throw std::invalid_argument("braid generator index must be >= 1");
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("braid letter sign must be +-1");
  }
}

int BraidWord::blocks_required() const {
  int top = 0;
  for (const auto& l : letters_) top = std::max(top, l.index);
  return top + 1;
}

std::string BraidWord::to_string() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += "b" + std::to_string(l.index);
    if (l.sign < 0) out += "'";
  }
  return out;
}

BraidUnitary four_string_braid(int j, int blocks, const AlgebraParams& params,
                               FourStringOrder order) {
  require_index(j, blocks);
  const Operator b_even = two_string_braid(2 * j, blocks, params);
  const Operator b_left = two_string_braid(2 * j - 1, blocks, params);
  const Operator b_right = two_string_braid(2 * j + 1, blocks, params);
  Operator forward = b_even * b_left * b_right * b_even;
  BraidWord word({{j, 1}});
  if (order == FourStringOrder::Forward) return {word, forward};
  return {word, forward.adjoint()};
}

BraidUnitary realize(const BraidWord& word, int blocks, const AlgebraParams& params,
                     FourStringOrder order) {
  if (word.blocks_required() > blocks) {
    throw SupportOutOfRange("braid word " + word.to_string() + " needs " +
                            std::to_string(word.blocks_required()) + " blocks, have " +
                            std::to_string(blocks));
  }
  Operator op = Operator::identity(params, blocks);
  for (const auto& l : word.letters()) {
    const Operator b = four_string_braid(l.index, blocks, params, order).op;
    op = op * (l.sign > 0 ? b : b.adjoint());
  }
  return {word, op};
}

AlgebraElement adjoint_action(const BraidUnitary& b, const AlgebraElement& a, double prune) {
  require_same_algebra(b.op.params(), a.params());
  const Operator x = represent(a, b.op.blocks());
  return expand(b.op * x * b.op.adjoint(), prune);
}

AlgebraElement braid_element(const BraidWord& word, const AlgebraParams& params,
                             FourStringOrder order) {
  AlgebraElement out = AlgebraElement::identity(params);
  for (const auto& l : word.letters()) {
    const AlgebraElement b = four_string_braid_element(l.index, params, order);
    out = multiply_pruned(out, l.sign > 0 ? b : adjoint(b));
  }
  return out;
}

AlgebraElement adjoint_action_symbolic(const BraidWord& word, const AlgebraElement& a,
                                       FourStringOrder order) {
  const AlgebraElement u = braid_element(word, a.params(), order);
  return multiply_pruned(multiply_pruned(u, a), adjoint(u));
}

AlgebraElement shift_alpha(const AlgebraElement& a, int k) {
  if (k < 0) throw std::invalid_argument("shift power must be non-negative");
  return shift_strands(a, 2 * k);
}

}  // namespace pfbraid
