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

#include "pfbraid/expr.hpp"

#include <charconv>
#include <cmath>

#include "pfbraid/format.hpp"
#include "pfbraid/matrix_rep.hpp"

namespace pfbraid::expr {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " at byte " + std::to_string(offset)), offset_(offset) {}

namespace {

constexpr long long kMaxInteger = 1'000'000'000;
constexpr int kMaxIndex = 1'000'000;

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

template <typename T>
bool holds(const NodePtr& n) {
  return std::holds_alternative<T>(n->v);
}

bool is_bare_scalar(const NodePtr& n) { return holds<NamedScalar>(n) || holds<Literal>(n); }

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  NodePtr run() {
    NodePtr out = expr();
    skip_ws();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return out;
  }

 private:
  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p_(p) {
      if (++p_.depth_ > kMaxDepth) p_.fail("expression nested too deeply");
    }
    ~DepthGuard() { --p_.depth_; }
    Parser& p_;
  };

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t offset) const {
    throw ParseError(message, offset);
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0';
  }

  void skip_ws() {
    while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool starts_atom() const {
    const char c = peek();
    return is_letter(c) || is_digit(c) || c == '(' || c == '.';
  }

  NodePtr expr() {
    DepthGuard guard(*this);
    skip_ws();
    Sum sum;
    bool leading_minus = false;
    if (peek() == '-') {
      ++pos_;
      leading_minus = true;
    }
    sum.terms.emplace_back(leading_minus ? -1 : 1, term());
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      sum.terms.emplace_back(c == '-' ? -1 : 1, term());
    }
    if (sum.terms.size() == 1 && !leading_minus) return sum.terms.front().second;
    return make(std::move(sum));
  }

  NodePtr term() {
    skip_ws();
    if (!starts_atom()) fail(pos_ < s_.size() ? "expected a term" : "unexpected end of input");
    std::vector<NodePtr> factors;
    auto [first, bare] = factor();
    factors.push_back(first);
    for (;;) {
      skip_ws();
      if (!starts_atom()) break;
      factors.push_back(factor().first);
    }
    if (factors.size() == 1) return factors.front();
    if (bare) {
      std::vector<NodePtr> rest(factors.begin() + 1, factors.end());
      NodePtr body = rest.size() == 1 ? rest.front() : make(Product{std::move(rest)});
      return make(Scaled{factors.front(), std::move(body)});
    }
    return make(Product{std::move(factors)});
  }

  // Returns the factor and whether it is a bare scalar atom.
  std::pair<NodePtr, bool> factor() {
    DepthGuard guard(*this);
    skip_ws();
    NodePtr a = atom();
    skip_ws();
    if (peek() != '^') return {a, is_bare_scalar(a) && !paren_};
    ++pos_;
    const long long e = signed_integer();
    if (!paren_ && holds<Gen>(a)) {
      return {make(Gen{std::get<Gen>(a->v).strand, e}), false};
    }
    if (!paren_ && holds<Braid>(a)) {
      const auto& b = std::get<Braid>(a->v);
      return {make(Braid{b.index, b.exponent * e}), false};
    }
    return {make(Power{a, e}), false};
  }

  long long signed_integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    if (!is_digit(peek())) fail("expected an integer");
    const long long v = digits(start);
    return negative ? -v : v;
  }

  long long digits(std::size_t start) {
    const std::size_t begin = pos_;
    while (is_digit(peek())) ++pos_;
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + begin, s_.data() + pos_, v);
    if (ec != std::errc{} || v > kMaxInteger) fail_at("integer out of range", start);
    (void)ptr;
    return v;
  }

  int index(const char* what) {
    const std::size_t start = pos_;
    if (!is_digit(peek())) fail(std::string("expected ") + what + " index");
    const long long v = digits(start);
    if (v < 1 || v > kMaxIndex) fail_at(std::string(what) + " index out of range", start);
    return static_cast<int>(v);
  }

  NodePtr atom() {
    paren_ = false;
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      expect(')');
      paren_ = true;
      return inner;
    }
    if (is_digit(c) || c == '.') return literal();
    if (!is_letter(c)) fail("expected an atom");
    while (is_letter(peek())) ++pos_;
    const std::string_view word = s_.substr(start, pos_ - start);
    if (word == "c") return make(Gen{index("strand"), 1});
    if (word == "b") {
      const int j = index("braid");
      long long e = 1;
      if (peek() == '\'') {
        ++pos_;
        e = -1;
      }
      return make(Braid{j, e});
    }
    if (word == "alpha") {
      skip_ws();
      int power = 1;
      if (peek() == '^') {
        ++pos_;
        const std::size_t at = pos_;
        const long long p = signed_integer();
        if (p < 0 || p > kMaxIndex) fail_at("shift power out of range", at);
        power = static_cast<int>(p);
      }
      expect('(');
      NodePtr body = expr();
      expect(')');
      return make(Alpha{power, std::move(body)});
    }
    if (word == "Ad") {
      expect('(');
      Ad ad;
      skip_ws();
      while (peek() == 'b') {
        ++pos_;
        AdLetter letter{index("braid"), 1};
        if (peek() == '\'') {
          ++pos_;
          letter.exponent = -1;
        }
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          letter.exponent *= signed_integer();
        }
        ad.word.push_back(letter);
        skip_ws();
      }
      if (ad.word.empty()) fail("expected a braid word");
      expect(')');
      expect('(');
      ad.body = expr();
      expect(')');
      return make(std::move(ad));
    }
    if (word == "star") {
      expect('(');
      NodePtr body = expr();
      expect(')');
      return make(Star{std::move(body)});
    }
    if (word == "q") return make(NamedScalar{Named::Q});
    if (word == "zeta") return make(NamedScalar{Named::Zeta});
    if (word == "omega") return make(NamedScalar{Named::Omega});
    if (word == "i") return make(NamedScalar{Named::I});
    fail_at("unknown symbol '" + std::string(word) + "'", start);
  }

  // Scans a decimal starting at `at`; returns its end or `at` when absent.
  std::size_t scan_decimal(std::size_t at) const {
    std::size_t p = at;
    std::size_t n_digits = 0;
    while (p < s_.size() && is_digit(s_[p])) ++p, ++n_digits;
    if (p < s_.size() && s_[p] == '.') {
      ++p;
      while (p < s_.size() && is_digit(s_[p])) ++p, ++n_digits;
    }
    if (n_digits == 0) return at;
    if (p < s_.size() && (s_[p] == 'e' || s_[p] == 'E')) {
      std::size_t q = p + 1;
      if (q < s_.size() && (s_[q] == '+' || s_[q] == '-')) ++q;
      if (q < s_.size() && is_digit(s_[q])) {
        while (q < s_.size() && is_digit(s_[q])) ++q;
        p = q;
      }
    }
    return p;
  }

  double decimal_value(std::size_t begin, std::size_t end) const {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s_.data() + begin, s_.data() + end, v);
    if (ec != std::errc{} || ptr != s_.data() + end || !std::isfinite(v)) {
      fail_at("malformed or out-of-range number", begin);
    }
    return v;
  }

  NodePtr literal() {
    const std::size_t start = pos_;
    const std::size_t end = scan_decimal(pos_);
    if (end == pos_) fail("expected a number");
    const double re = decimal_value(pos_, end);
    pos_ = end;
    if (peek() == 'i' && !is_letter(peek(1))) {
      ++pos_;
      return make(Literal{Complex{0.0, re}});
    }
    if (peek() == '+' || peek() == '-') {
      const std::size_t im_end = scan_decimal(pos_ + 1);
      if (im_end > pos_ + 1 && im_end < s_.size() && s_[im_end] == 'i' &&
          !(im_end + 1 < s_.size() && is_letter(s_[im_end + 1]))) {
        double im = decimal_value(pos_ + 1, im_end);
        if (s_[pos_] == '-') im = -im;
        pos_ = im_end + 1;
        return make(Literal{Complex{re, im}});
      }
    }
    (void)start;
    return make(Literal{Complex{re, 0.0}});
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  bool paren_ = false;
};

// --- printing -------------------------------------------------------------

std::string print_factor(const NodePtr& n);

std::string print_node(const Node& n);

std::string print_product_body(const Product& p, bool guard_first) {
  std::string out;
  for (std::size_t i = 0; i < p.factors.size(); ++i) {
    if (i > 0) out += ' ';
    const auto& f = p.factors[i];
    if (i == 0 && guard_first && is_bare_scalar(f)) {
      out += "(" + print_node(*f) + ")";
    } else {
      out += print_factor(f);
    }
  }
  return out;
}

std::string print_factor(const NodePtr& n) {
  if (holds<Sum>(n) || holds<Scaled>(n) || holds<Product>(n)) return "(" + print_node(*n) + ")";
  return print_node(*n);
}

std::string exponent_suffix(long long e) { return e == 1 ? "" : "^" + std::to_string(e); }

std::string braid_letter(int index, long long e) {
  std::string out = "b" + std::to_string(index);
  if (e == -1) return out + "'";
  return out + exponent_suffix(e);
}

struct Printer {
  std::string operator()(const Sum& s) const {
    std::string out;
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
      const auto& [sign, t] = s.terms[i];
      if (i == 0) {
        if (sign < 0) out += "-";
      } else {
        out += sign < 0 ? " - " : " + ";
      }
      out += holds<Sum>(t) ? "(" + print_node(*t) + ")" : print_node(*t);
    }
    return out;
  }
  std::string operator()(const Scaled& s) const {
    std::string out = print_node(*s.scalar) + " ";
    if (holds<Product>(s.body)) return out + print_product_body(std::get<Product>(s.body->v), false);
    return out + print_factor(s.body);
  }
  std::string operator()(const Product& p) const { return print_product_body(p, true); }
  std::string operator()(const Gen& g) const {
    return "c" + std::to_string(g.strand) + exponent_suffix(g.exponent);
  }
  std::string operator()(const Braid& b) const { return braid_letter(b.index, b.exponent); }
  std::string operator()(const Alpha& a) const {
    return "alpha" + exponent_suffix(a.power) + "(" + print_node(*a.body) + ")";
  }
  std::string operator()(const Ad& a) const {
    std::string word;
    for (const auto& l : a.word) {
      if (!word.empty()) word += ' ';
      word += braid_letter(l.index, l.exponent);
    }
    return "Ad(" + word + ")(" + print_node(*a.body) + ")";
  }
  std::string operator()(const Star& s) const { return "star(" + print_node(*s.body) + ")"; }
  std::string operator()(const Power& p) const {
    const bool wrap = !(holds<Alpha>(p.base) || holds<Ad>(p.base) || holds<Star>(p.base) ||
                        holds<NamedScalar>(p.base) || holds<Literal>(p.base));
    const std::string base = wrap ? "(" + print_node(*p.base) + ")" : print_node(*p.base);
    return base + "^" + std::to_string(p.exponent);
  }
  std::string operator()(const NamedScalar& n) const {
    switch (n.which) {
      case Named::Q: return "q";
      case Named::Zeta: return "zeta";
      case Named::Omega: return "omega";
      case Named::I: return "i";
    }
    return "?";
  }
  std::string operator()(const Literal& l) const { return format_complex_literal(l.value); }
};

std::string print_node(const Node& n) { return std::visit(Printer{}, n.v); }

// --- evaluation -----------------------------------------------------------

constexpr long long kMaxBraidPower = 64;
constexpr long long kMaxPower = 1 << 20;

AlgebraElement element_power(const AlgebraElement& base, long long e) {
  const auto& params = base.params();
  if (e < 0) {
    if (base.size() != 1) throw EvalError("negative powers need a single-term base");
    const auto& [word, coeff] = *base.terms().begin();
    std::vector<RawLetter> inverse;
    const auto& letters = word.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      inverse.push_back({it->strand, -static_cast<long long>(it->exponent)});
    }
    const Monomial m = normalize(inverse, params, 1.0 / coeff.base);
    AlgebraElement inv(params);
    inv.add_term(m.word, Coefficient{m.coefficient.base,
                                     params.reduce_phase(static_cast<long long>(m.coefficient.phase) -
                                                         coeff.phase)});
    return element_power(inv, -e);
  }
  if (e > kMaxPower) throw EvalError("exponent too large");
  AlgebraElement result = AlgebraElement::identity(params);
  AlgebraElement square = base;
  while (e > 0) {
    if (e & 1) result = multiply(result, square);
    e >>= 1;
    if (e > 0) square = multiply(square, square);
  }
  return result;
}

AlgebraElement braid_power(int index, long long e, const AlgebraParams& params,
                           FourStringOrder order) {
  if (e > kMaxBraidPower || e < -kMaxBraidPower) throw EvalError("braid exponent too large");
  const AlgebraElement b = four_string_braid_element(index, params, order);
  const AlgebraElement step = e >= 0 ? b : adjoint(b);
  AlgebraElement out = AlgebraElement::identity(params);
  for (long long i = 0; i < (e >= 0 ? e : -e); ++i) out = multiply_pruned(out, step);
  return out;
}

struct Evaluator {
  const AlgebraParams& params;
  FourStringOrder order;

  AlgebraElement eval(const Node& n) const { return std::visit(*this, n.v); }

  AlgebraElement operator()(const Sum& s) const {
    AlgebraElement out(params);
    for (const auto& [sign, t] : s.terms) out = sign < 0 ? out - eval(*t) : out + eval(*t);
    return out;
  }
  AlgebraElement operator()(const Scaled& s) const {
    return multiply(eval(*s.scalar), eval(*s.body));
  }
  AlgebraElement operator()(const Product& p) const {
    AlgebraElement out = AlgebraElement::identity(params);
    for (const auto& f : p.factors) out = multiply(out, eval(*f));
    return out;
  }
  AlgebraElement operator()(const Gen& g) const {
    return AlgebraElement::generator(params, g.strand, g.exponent);
  }
  AlgebraElement operator()(const Braid& b) const {
    return braid_power(b.index, b.exponent, params, order);
  }
  AlgebraElement operator()(const Alpha& a) const { return shift_alpha(eval(*a.body), a.power); }
  AlgebraElement operator()(const Ad& a) const {
    AlgebraElement u = AlgebraElement::identity(params);
    for (const auto& l : a.word) u = multiply_pruned(u, braid_power(l.index, l.exponent, params, order));
    return multiply_pruned(multiply_pruned(u, eval(*a.body)), adjoint(u));
  }
  AlgebraElement operator()(const Star& s) const { return adjoint(eval(*s.body)); }
  AlgebraElement operator()(const Power& p) const { return element_power(eval(*p.base), p.exponent); }
  AlgebraElement operator()(const NamedScalar& n) const {
    const int quarter = params.phase_denominator() / 4;
    switch (n.which) {
      case Named::Q: return AlgebraElement::scalar(params, Coefficient{1.0, params.q_phase()});
      case Named::Zeta: return AlgebraElement::scalar(params, Coefficient{1.0, params.zeta_phase()});
      case Named::Omega: return AlgebraElement::identity(params, gauss_phase(params).omega);
      case Named::I:
        if (params.phase_denominator() % 4 == 0) {
          return AlgebraElement::scalar(params, Coefficient{1.0, quarter});
        }
        return AlgebraElement::identity(params, Complex{0.0, 1.0});
    }
    return AlgebraElement(params);
  }
  AlgebraElement operator()(const Literal& l) const { return AlgebraElement::identity(params, l.value); }
};

}  // namespace

bool equal(const Node& a, const Node& b) {
  if (a.v.index() != b.v.index()) return false;
  auto same = [](const NodePtr& x, const NodePtr& y) { return equal(*x, *y); };
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.v);
        if constexpr (std::is_same_v<T, Sum>) {
          if (x.terms.size() != y.terms.size()) return false;
          for (std::size_t i = 0; i < x.terms.size(); ++i) {
            if (x.terms[i].first != y.terms[i].first || !same(x.terms[i].second, y.terms[i].second)) {
              return false;
            }
          }
          return true;
        } else if constexpr (std::is_same_v<T, Scaled>) {
          return same(x.scalar, y.scalar) && same(x.body, y.body);
        } else if constexpr (std::is_same_v<T, Product>) {
          if (x.factors.size() != y.factors.size()) return false;
          for (std::size_t i = 0; i < x.factors.size(); ++i) {
            if (!same(x.factors[i], y.factors[i])) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, Gen>) {
          return x.strand == y.strand && x.exponent == y.exponent;
        } else if constexpr (std::is_same_v<T, Braid>) {
          return x.index == y.index && x.exponent == y.exponent;
        } else if constexpr (std::is_same_v<T, Alpha>) {
          return x.power == y.power && same(x.body, y.body);
        } else if constexpr (std::is_same_v<T, Ad>) {
          if (x.word.size() != y.word.size()) return false;
          for (std::size_t i = 0; i < x.word.size(); ++i) {
            if (x.word[i].index != y.word[i].index || x.word[i].exponent != y.word[i].exponent) {
              return false;
            }
          }
          return same(x.body, y.body);
        } else if constexpr (std::is_same_v<T, Star>) {
          return same(x.body, y.body);
        } else if constexpr (std::is_same_v<T, Power>) {
          return x.exponent == y.exponent && same(x.base, y.base);
        } else if constexpr (std::is_same_v<T, NamedScalar>) {
          return x.which == y.which;
        } else {
          return x.value == y.value;
        }
      },
      a.v);
}

NodePtr parse(std::string_view text) { return Parser(text).run(); }

std::string print(const Node& node) { return print_node(node); }

AlgebraElement evaluate(const Node& node, const AlgebraParams& params, FourStringOrder order) {
  return Evaluator{params, order}.eval(node);
}

}  // namespace pfbraid::expr
