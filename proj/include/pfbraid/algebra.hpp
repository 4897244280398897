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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pfbraid/params.hpp"

namespace pfbraid {

/// One factor c_strand^exponent of a raw (not yet normalized) word.
struct RawLetter {
  int strand;
  long long exponent;
};

/// c_strand^exponent inside a normal-form word; exponent lies in 1..d-1.
struct Letter {
  int strand;
  int exponent;

  auto operator<=>(const Letter&) const = default;
};

/// Exponent vector of a normal-form monomial: letters with strictly increasing
/// strands and non-zero exponents.  The empty word is the identity.
class Word {
 public:
  Word() = default;

  /// Validates the normal-form invariants; throws std::invalid_argument.
  Word(std::vector<Letter> letters, int d);

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  /// Exponent on `strand`, zero when absent.
  int exponent(int strand) const;

  /// Largest strand, zero for the identity.
  int max_strand() const { return letters_.empty() ? 0 : letters_.back().strand; }
  int min_strand() const { return letters_.empty() ? 0 : letters_.front().strand; }

  /// Sum of exponents mod d.
  Charge degree(int d) const;

  /// Length-prefixed encoding: "n:s1,e1;s2,e2;...".  Used as a canonical key.
  std::string key() const;

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Scalar base * exp(2 pi i phase / N).  Multiplication adds phases exactly;
/// the float value is only formed by `realize`.
struct Coefficient {
  Complex base{1.0, 0.0};
  int phase = 0;

  bool operator==(const Coefficient&) const = default;
};

Complex realize(const Coefficient& c, const AlgebraParams& params);

/// A normal-form word with its coefficient.
struct Monomial {
  Word word;
  Coefficient coefficient;

  bool operator==(const Monomial&) const = default;
};

/// Rewrites an arbitrary product of generators into normal form using
/// c_j c_k = q c_k c_j (j < k) and c_j^d = I.  `coeff` is carried as the base
/// of the resulting coefficient; all q-powers land in its phase.
Monomial normalize(std::span<const RawLetter> word, const AlgebraParams& params,
                   Complex coeff = {1.0, 0.0});

/// Finite linear combination of normal-form monomials.
class AlgebraElement {
 public:
  using TermMap = std::map<Word, Coefficient>;

  explicit AlgebraElement(AlgebraParams params) : params_(std::move(params)) {}

  static AlgebraElement identity(const AlgebraParams& params, Complex scale = {1.0, 0.0});
  static AlgebraElement scalar(const AlgebraParams& params, Coefficient c);
  static AlgebraElement generator(const AlgebraParams& params, int strand, long long exponent = 1);
  static AlgebraElement monomial(const AlgebraParams& params, const Monomial& m);
  static AlgebraElement from_word(const AlgebraParams& params, std::span<const RawLetter> word,
                                  Complex coeff = {1.0, 0.0});

  const AlgebraParams& params() const { return params_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Numerical coefficient of `word` (zero when absent).
  Complex coefficient(const Word& word) const;

  /// Adds c * word, merging with an existing term and deleting exact zeros.
  void add_term(const Word& word, const Coefficient& c);

  int max_strand() const;
  int min_strand() const;

  /// Smallest m with the element inside PF_{2m}.
  int blocks_required() const { return (max_strand() + 1) / 2; }

  /// Drops terms whose magnitude is at most `threshold`.
  AlgebraElement pruned(double threshold) const;

  /// Sum of coefficient magnitudes.
  double l1_norm() const;

  /// Max coefficient difference over the union of supports.
  double distance(const AlgebraElement& other) const;

  AlgebraElement operator+(const AlgebraElement& other) const;
  AlgebraElement operator-(const AlgebraElement& other) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(Complex s) const;
  AlgebraElement scaled(const Coefficient& c) const;

  /// Exact equality of term maps (same words, same coefficient representation).
  bool operator==(const AlgebraElement& other) const {
    return params_ == other.params_ && terms_ == other.terms_;
  }

  /// Parseable text, e.g. "1", "c1^2 c2", "q^2 c1 c3 + (0.5-1i) c4".
  std::string to_string() const;

 private:
  AlgebraParams params_;
  TermMap terms_;
};

AlgebraElement operator*(Complex s, const AlgebraElement& a);

/// Bilinear product with normal-form rewriting; throws IncompatibleAlgebras
/// when the orders differ.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// Antilinear, antimultiplicative star with c_j^* = c_j^{-1}.
AlgebraElement adjoint(const AlgebraElement& a);

/// Marker for elements whose terms carry different charges.
struct Mixed {
  bool operator==(const Mixed&) const = default;
};
using Degree = std::variant<Charge, Mixed>;

/// Common charge of all terms; the zero element reports charge 0.
Degree degree(const AlgebraElement& a);

/// True when `a` has a single charge.
bool is_homogeneous(const AlgebraElement& a);

/// Per-charge split; components sum to `a`.  Only non-zero components are
/// present in the map.
std::map<int, AlgebraElement> charge_components(const AlgebraElement& a);

/// The same split computed through conjugation by c_1,
///   y_l = (1/d) sum_k q^{k l} c_1^{-k} y c_1^{k}.
/// Exact only for elements supported on strands >= 2.
std::map<int, AlgebraElement> charge_components_by_conjugation(const AlgebraElement& a);

/// zeta^{mn} * a * b for homogeneous a (degree m) and b (degree n); throws
/// std::invalid_argument on mixed input.
AlgebraElement twisted_product(const AlgebraElement& a, const AlgebraElement& b);

/// Re-indexes every strand j -> j + offset (offset >= 0).
AlgebraElement shift_strands(const AlgebraElement& a, int offset);

}  // namespace pfbraid
