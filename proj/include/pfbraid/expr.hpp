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

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pfbraid/algebra.hpp"
#include "pfbraid/braid.hpp"

// Expression language:
//
//   expr   := ["-"] term (("+" | "-") term)*
//   term   := factor+                 a leading bare scalar scales the rest
//   factor := atom ("^" int)?
//   atom   := "c" int | "b" int ["'"] | "(" expr ")"
//           | "alpha" ["^" int] "(" expr ")"
//           | "Ad" "(" braidword ")" "(" expr ")"
//           | "star" "(" expr ")" | scalar
//   scalar := decimal | decimal "i" | decimal ("+"|"-") decimal "i"
//           | "q" | "zeta" | "omega" | "i"
//   braidword := ("b" int ["'"] ["^" int])+
//
// A complex literal is one lexeme with no inner whitespace ("0.5-2i"), so its
// real part is never negative.

namespace pfbraid::expr {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class EvalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Sum {
  /// (+1 | -1, term).
  std::vector<std::pair<int, NodePtr>> terms;
};
struct Scaled {
  NodePtr scalar;
  NodePtr body;
};
struct Product {
  std::vector<NodePtr> factors;
};
struct Gen {
  int strand;
  long long exponent;
};
struct Braid {
  int index;
  long long exponent;
};
struct Alpha {
  int power;
  NodePtr body;
};
struct AdLetter {
  int index;
  long long exponent;
};
struct Ad {
  std::vector<AdLetter> word;
  NodePtr body;
};
struct Star {
  NodePtr body;
};
struct Power {
  NodePtr base;
  long long exponent;
};
enum class Named { Q, Zeta, Omega, I };
struct NamedScalar {
  Named which;
};
struct Literal {
  Complex value;
};

struct Node {
  std::variant<Sum, Scaled, Product, Gen, Braid, Alpha, Ad, Star, Power, NamedScalar, Literal> v;
};

template <typename T>
NodePtr make(T value) {
  return std::make_shared<const Node>(Node{std::move(value)});
}

/// Structural equality.
bool equal(const Node& a, const Node& b);

inline constexpr int kMaxDepth = 256;

NodePtr parse(std::string_view text);

/// Text that parses back to a structurally equal tree.  Literals must have a
/// non-negative real part (as every parsed literal does).
std::string print(const Node& node);

/// Symbolic evaluation.  Braids use four-string braid elements; omega is the
/// Gauss phase.  Throws EvalError for unsupported powers.
AlgebraElement evaluate(const Node& node, const AlgebraParams& params,
                        FourStringOrder order = FourStringOrder::Adjoint);

}  // namespace pfbraid::expr
