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

#include "pfbraid/state_io.hpp"

#include <fstream>
#include <set>

namespace pfbraid::io {

namespace {

int require_int(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw FormatError(std::string("missing integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

json word_to_json(const Word& w) {
  json out = json::array();
  for (const auto& l : w.letters()) out.push_back({l.strand, l.exponent});
  return out;
}

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError("complex numbers are [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json functional_to_json(const StateFunctional& phi) {
  const int d = phi.params().d();
  json terms = json::array();
  for (std::size_t idx = 0; idx < phi.values().size(); ++idx) {
    const Complex v = phi.values()[idx];
    if (v == Complex{}) continue;
    terms.push_back({{"monomial", word_to_json(monomial_at(static_cast<std::int64_t>(idx), d, phi.blocks()))},
                     {"value", complex_to_json(v)}});
  }
  return {{"d", d}, {"m", phi.blocks()}, {"terms", terms}};
}

StateFunctional functional_from_json(const json& j, ZetaBranch branch) {
  const AlgebraParams params(require_int(j, "d"), branch);
  const int m = require_int(j, "m");
  const int d = params.d();
  std::vector<Complex> values(monomial_count(d, m));
  if (!j.contains("terms") || !j.at("terms").is_array()) throw FormatError("missing 'terms' array");
  std::set<std::int64_t> seen;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("monomial") || !t.contains("value")) {
      throw FormatError("each term needs 'monomial' and 'value'");
    }
    std::vector<Letter> letters;
    for (const auto& pair : t.at("monomial")) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
          !pair[1].is_number_integer()) {
        throw FormatError("monomial entries are [strand, exponent] integer pairs");
      }
      letters.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    Word w;
    try {
      w = Word(std::move(letters), d);
    } catch (const std::invalid_argument& e) {
      throw FormatError(std::string("monomial not in normal form: ") + e.what());
    }
    const auto idx = monomial_index(w, d, m);
    if (!seen.insert(idx).second) throw FormatError("duplicate monomial " + w.key());
    values[idx] = complex_from_json(t.at("value"));
  }
  return StateFunctional(params, m, std::move(values));
}

json density_to_json(const Matrix& m, int d, int blocks) {
  json entries = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(complex_to_json(m(r, c)));
  }
  return {{"d", d}, {"m", blocks}, {"matrix", entries}};
}

Operator density_from_json(const json& j, ZetaBranch branch) {
  const AlgebraParams params(require_int(j, "d"), branch);
  const int m = require_int(j, "m");
  const auto dim = checked_dimension(params.d(), m);
  if (!j.contains("matrix") || !j.at("matrix").is_array()) throw FormatError("missing 'matrix' array");
  const auto& entries = j.at("matrix");
  if (static_cast<std::int64_t>(entries.size()) != dim * dim) {
    throw FormatError("matrix needs " + std::to_string(dim * dim) + " entries");
  }
  Matrix out(dim, dim);
  for (std::int64_t r = 0; r < dim; ++r) {
    for (std::int64_t c = 0; c < dim; ++c) out(r, c) = complex_from_json(entries[r * dim + c]);
  }
  return Operator(params, m, std::move(out));
}

StateFunctional state_from_json(const json& j, ZetaBranch branch) {
  if (j.is_object() && j.contains("matrix")) {
    return density_to_functional(DensityState(density_from_json(j, branch), 1e-9, 1e-9));
  }
  return functional_from_json(j, branch);
}

json mixture_to_json(const Mixture& mixture) {
  json comps = json::array();
  for (const auto& [w, m] : mixture.components) {
    comps.push_back({{"weight", w}, {"density", density_to_json(m, mixture.d, mixture.m)}});
  }
  return {{"components", comps}};
}

Mixture mixture_from_json(const json& j) {
  if (!j.is_object() || !j.contains("components") || !j.at("components").is_array() ||
      j.at("components").empty()) {
    throw FormatError("mixture needs a non-empty 'components' array");
  }
  Mixture out;
  for (const auto& c : j.at("components")) {
    if (!c.is_object() || !c.contains("weight") || !c.at("weight").is_number() || !c.contains("density")) {
      throw FormatError("each component needs 'weight' and 'density'");
    }
    const Operator op = density_from_json(c.at("density"));
    if (out.components.empty()) {
      out.d = op.params().d();
      out.m = op.blocks();
    } else if (op.params().d() != out.d || op.blocks() != out.m) {
      throw FormatError("mixture components have different shapes");
    }
    out.components.emplace_back(c.at("weight").get<double>(), op.matrix());
  }
  return out;
}

json element_to_json(const AlgebraElement& a) {
  json terms = json::array();
  for (const auto& [w, c] : a.terms()) {
    terms.push_back({{"monomial", word_to_json(w)}, {"value", complex_to_json(realize(c, a.params()))}});
  }
  return {{"text", a.to_string()}, {"terms", terms}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("invalid JSON in " + path + ": " + e.what());
  }
}

}  // namespace pfbraid::io
