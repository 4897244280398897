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

#include "pfbraid/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pfbraid/format.hpp"

namespace pfbraid {

Word::Word(std::vector<Letter> letters, int d) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const auto& l = letters_[i];
    if (l.strand < 1) throw std::invalid_argument("strand indices start at 1");
    if (l.exponent < 1 || l.exponent >= d) {
      throw std::invalid_argument("normal-form exponents must lie in 1..d-1");
    }
    if (i > 0 && letters_[i - 1].strand >= l.strand) {
      throw std::invalid_argument("normal-form strands must be strictly increasing");
    }
  }
}

int Word::exponent(int strand) const {
  auto it = std::lower_bound(letters_.begin(), letters_.end(), strand,
                             [](const Letter& l, int s) { return l.strand < s; });
  return (it != letters_.end() && it->strand == strand) ? it->exponent : 0;
}

Charge Word::degree(int d) const {
  long long sum = 0;
  for (const auto& l : letters_) sum += l.exponent;
  return Charge(sum, d);
}

std::string Word::key() const {
  std::string out = std::to_string(letters_.size()) + ":";
  for (const auto& l : letters_) {
    out += std::to_string(l.strand) + "," + std::to_string(l.exponent) + ";";
  }
  return out;
}

Complex realize(const Coefficient& c, const AlgebraParams& params) {
  if (c.phase == 0) return c.base;
  return c.base * params.phase(c.phase);
}

Monomial normalize(std::span<const RawLetter> word, const AlgebraParams& params, Complex coeff) {
  const int d = params.d();
  std::vector<RawLetter> reduced;
  reduced.reserve(word.size());
  for (const auto& l : word) {
    if (l.strand < 1) throw std::invalid_argument("strand indices start at 1");
    const int e = params.reduce_exponent(l.exponent);
    if (e != 0) reduced.push_back({l.strand, e});
  }

  // Moving c_k^b left past c_j^a (j < k) costs q^{-ab}; count every inversion.
  long long q_power = 0;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    for (std::size_t j = i + 1; j < reduced.size(); ++j) {
      if (reduced[i].strand > reduced[j].strand) {
        q_power -= reduced[i].exponent * reduced[j].exponent;
      }
    }
  }
  std::stable_sort(reduced.begin(), reduced.end(),
                   [](const RawLetter& a, const RawLetter& b) { return a.strand < b.strand; });

  Word out;
  std::vector<Letter> letters;
  for (const auto& l : reduced) {
    if (!letters.empty() && letters.back().strand == l.strand) {
      letters.back().exponent = params.reduce_exponent(letters.back().exponent + l.exponent);
      if (letters.back().exponent == 0) letters.pop_back();
    } else {
      letters.push_back({l.strand, static_cast<int>(l.exponent)});
    }
  }
  const int phase = params.reduce_phase((q_power % d) * params.q_phase());
  return Monomial{Word(std::move(letters), d), Coefficient{coeff, phase}};
}

// --- AlgebraElement -------------------------------------------------------

AlgebraElement AlgebraElement::identity(const AlgebraParams& params, Complex scale) {
  AlgebraElement e(params);
  e.add_term(Word(), Coefficient{scale, 0});
  return e;
}

AlgebraElement AlgebraElement::scalar(const AlgebraParams& params, Coefficient c) {
  AlgebraElement e(params);
  c.phase = params.reduce_phase(c.phase);
  e.add_term(Word(), c);
  return e;
}

AlgebraElement AlgebraElement::generator(const AlgebraParams& params, int strand,
                                         long long exponent) {
  const RawLetter l{strand, exponent};
  return from_word(params, std::span<const RawLetter>(&l, 1));
}

AlgebraElement AlgebraElement::monomial(const AlgebraParams& params, const Monomial& m) {
  AlgebraElement e(params);
  e.add_term(m.word, m.coefficient);
  return e;
}

AlgebraElement AlgebraElement::from_word(const AlgebraParams& params,
                                         std::span<const RawLetter> word, Complex coeff) {
  return monomial(params, normalize(word, params, coeff));
}

Complex AlgebraElement::coefficient(const Word& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Complex{} : realize(it->second, params_);
}

void AlgebraElement::add_term(const Word& word, const Coefficient& c) {
  if (c.base == Complex{}) return;
  auto [it, inserted] = terms_.try_emplace(word, c);
  if (inserted) return;
  Coefficient& existing = it->second;
  if (existing.phase == c.phase) {
    existing.base += c.base;
  } else {
    existing = Coefficient{realize(existing, params_) + realize(c, params_), 0};
  }
  if (existing.base == Complex{}) terms_.erase(it);
}

int AlgebraElement::max_strand() const {
  int s = 0;
  for (const auto& [w, c] : terms_) s = std::max(s, w.max_strand());
  return s;
}

int AlgebraElement::min_strand() const {
  int s = 0;
  for (const auto& [w, c] : terms_) {
    if (w.is_identity()) continue;
    s = (s == 0) ? w.min_strand() : std::min(s, w.min_strand());
  }
  return s;
}

AlgebraElement AlgebraElement::pruned(double threshold) const {
  AlgebraElement out(params_);
  for (const auto& [w, c] : terms_) {
    if (std::abs(c.base) > threshold) out.terms_.emplace(w, c);
  }
  return out;
}

double AlgebraElement::l1_norm() const {
  double s = 0.0;
  for (const auto& [w, c] : terms_) s += std::abs(c.base);
  return s;
}

double AlgebraElement::distance(const AlgebraElement& other) const {
  require_same_algebra(params_, other.params_);
  double worst = 0.0;
  for (const auto& [w, c] : terms_) {
    worst = std::max(worst, std::abs(realize(c, params_) - other.coefficient(w)));
  }
  for (const auto& [w, c] : other.terms_) {
    if (!terms_.contains(w)) worst = std::max(worst, std::abs(c.base));
  }
  return worst;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
  require_same_algebra(params_, other.params_);
  AlgebraElement out = *this;
  for (const auto& [w, c] : other.terms_) out.add_term(w, c);
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
  return *this + (-other);
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out = *this;
  for (auto& [w, c] : out.terms_) c.base = -c.base;
  return out;
}

AlgebraElement AlgebraElement::operator*(Complex s) const {
  return scaled(Coefficient{s, 0});
}

AlgebraElement AlgebraElement::scaled(const Coefficient& s) const {
  AlgebraElement out(params_);
  for (const auto& [w, c] : terms_) {
    out.add_term(w, Coefficient{c.base * s.base, params_.reduce_phase(c.phase + s.phase)});
  }
  return out;
}

AlgebraElement operator*(Complex s, const AlgebraElement& a) { return a * s; }

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string coeff = format_coefficient(c, params_);
    std::string body;
    for (const auto& l : w.letters()) {
      if (!body.empty()) body += ' ';
      body += "c" + std::to_string(l.strand);
      if (l.exponent != 1) body += "^" + std::to_string(l.exponent);
    }
    bool negative = false;
    if (!coeff.empty() && coeff.front() == '-') {
      negative = true;
      coeff.erase(coeff.begin());
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (body.empty()) {
      os << (coeff.empty() ? "1" : coeff);
    } else {
      if (!coeff.empty()) os << coeff << ' ';
      os << body;
    }
  }
  return os.str();
}

// --- operations -----------------------------------------------------------

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_algebra(a.params(), b.params());
  const auto& params = a.params();
  AlgebraElement out(params);
  std::vector<RawLetter> buffer;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      buffer.clear();
      for (const auto& l : wa.letters()) buffer.push_back({l.strand, l.exponent});
      for (const auto& l : wb.letters()) buffer.push_back({l.strand, l.exponent});
      const Monomial m = normalize(buffer, params, ca.base * cb.base);
      out.add_term(m.word, Coefficient{m.coefficient.base,
                                       params.reduce_phase(static_cast<long long>(m.coefficient.phase) +
                                                           ca.phase + cb.phase)});
    }
  }
  return out;
}

AlgebraElement adjoint(const AlgebraElement& a) {
  const auto& params = a.params();
  AlgebraElement out(params);
  std::vector<RawLetter> buffer;
  for (const auto& [w, c] : a.terms()) {
    buffer.clear();
    const auto& letters = w.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      buffer.push_back({it->strand, -static_cast<long long>(it->exponent)});
    }
    const Monomial m = normalize(buffer, params, std::conj(c.base));
    out.add_term(m.word,
                 Coefficient{m.coefficient.base,
                             params.reduce_phase(static_cast<long long>(m.coefficient.phase) - c.phase)});
  }
  return out;
}

Degree degree(const AlgebraElement& a) {
  const int d = a.params().d();
  if (a.is_zero()) return Charge(0, d);
  std::optional<Charge> common;
  for (const auto& [w, c] : a.terms()) {
    const Charge deg = w.degree(d);
    if (!common) {
      common = deg;
    } else if (*common != deg) {
      return Mixed{};
    }
  }
  return *common;
}

bool is_homogeneous(const AlgebraElement& a) {
  return std::holds_alternative<Charge>(degree(a));
}

std::map<int, AlgebraElement> charge_components(const AlgebraElement& a) {
  const int d = a.params().d();
  std::map<int, AlgebraElement> out;
  for (const auto& [w, c] : a.terms()) {
    const int ell = w.degree(d).value();
    auto it = out.try_emplace(ell, a.params()).first;
    it->second.add_term(w, c);
  }
  return out;
}

std::map<int, AlgebraElement> charge_components_by_conjugation(const AlgebraElement& a) {
  const auto& params = a.params();
  const int d = params.d();
  std::map<int, AlgebraElement> out;
  for (int ell = 0; ell < d; ++ell) {
    AlgebraElement sum(params);
    for (int k = 0; k < d; ++k) {
      const AlgebraElement left = AlgebraElement::generator(params, 1, -k);
      const AlgebraElement right = AlgebraElement::generator(params, 1, k);
      const AlgebraElement conj = multiply(multiply(left, a), right);
      sum = sum + conj.scaled(Coefficient{1.0 / d, params.reduce_phase(
                                                        static_cast<long long>(k) * ell * params.q_phase())});
    }
    sum = sum.pruned(1e-12 * std::max(1.0, a.l1_norm()));
    if (!sum.is_zero()) out.emplace(ell, std::move(sum));
  }
  return out;
}

AlgebraElement twisted_product(const AlgebraElement& a, const AlgebraElement& b) {
  const Degree da = degree(a);
  const Degree db = degree(b);
  if (!std::holds_alternative<Charge>(da) || !std::holds_alternative<Charge>(db)) {
    throw std::invalid_argument("twisted product needs homogeneous factors");
  }
  const auto& params = a.params();
  const long long mn =
      static_cast<long long>(std::get<Charge>(da).value()) * std::get<Charge>(db).value();
  return multiply(a, b).scaled(
      Coefficient{1.0, params.reduce_phase(mn * params.zeta_phase())});
}

AlgebraElement shift_strands(const AlgebraElement& a, int offset) {
  if (offset < 0) throw std::invalid_argument("strand shift must be non-negative");
  AlgebraElement out(a.params());
  for (const auto& [w, c] : a.terms()) {
    std::vector<Letter> letters = w.letters();
    for (auto& l : letters) l.strand += offset;
    out.add_term(Word(std::move(letters), a.params().d()), c);
  }
  return out;
}

}  // namespace pfbraid
