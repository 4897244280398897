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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <array>
#include <filesystem>
#include <fstream>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "../support/fixtures.hpp"
#include "../support/oracle.hpp"
#include "../support/random_ast.hpp"
#include "pfbraid/definetti.hpp"
#include "pfbraid/expr.hpp"
#include "pfbraid/state_io.hpp"

namespace {

using namespace pfbraid;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

double commutator_q(const Matrix& a, const Matrix& b, Complex q) { return (a * b - q * b * a).norm(); }

// 1
void cpr_suite(Outcome& out) {
  const auto start = Clock::now();
  double worst = 0.0;
  for (int d = 2; d <= 6; ++d) {
    const AlgebraParams p(d);
    for (int m = 1; m <= 3; ++m) {
      std::vector<Matrix> u;
      for (int j = 1; j <= 2 * m; ++j) u.push_back(represent_generator(j, m, p).matrix());
      const Matrix eye = Matrix::Identity(u[0].rows(), u[0].cols());
      for (std::size_t j = 0; j < u.size(); ++j) {
        Matrix power = eye;
        for (int e = 0; e < d; ++e) power = power * u[j];
        worst = std::max(worst, (power - eye).norm());
        for (std::size_t k = j + 1; k < u.size(); ++k) worst = std::max(worst, commutator_q(u[j], u[k], p.q()));
      }
    }
  }
  const double elapsed = seconds_since(start);
  out.detail << "max residual " << worst << " (tol 1e-10), " << elapsed << " s (limit 30 s)";
  out.require(worst <= 1e-10, "residual");
  out.require(elapsed <= 30.0, "runtime");
}

// 2
void braid_relations(Outcome& out) {
  double braid = 0.0;
  for (int d = 2; d <= 3; ++d) {
    const AlgebraParams p(d);
    const Matrix b1 = four_string_braid(1, 3, p).op.matrix();
    const Matrix b2 = four_string_braid(2, 3, p).op.matrix();
    braid = std::max(braid, (b1 * b2 * b1 - b2 * b1 * b2).norm());
  }
  const AlgebraParams p(2);
  const Matrix b1 = four_string_braid(1, 4, p).op.matrix();
  const Matrix b3 = four_string_braid(3, 4, p).op.matrix();
  const double far = (b1 * b3 - b3 * b1).norm();
  out.detail << "b1b2b1-b2b1b2 " << braid << ", [b1,b3] " << far << " (tol 1e-9)";
  out.require(braid <= 1e-9 && far <= 1e-9, "residual");
}

// 3
void pair_exchange(Outcome& out) {
  double worst = 0.0;
  for (int d = 2; d <= 4; ++d) {
    const AlgebraParams p(d);
    const auto b1 = four_string_braid(1, 2, p);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        const std::vector<RawLetter> src{{1, a}, {2, b}}, dst{{3, a}, {4, b}};
        worst = std::max(worst, adjoint_action(b1, AlgebraElement::from_word(p, src), 0.0)
                                    .distance(AlgebraElement::from_word(p, dst)));
      }
    }
  }
  out.detail << "max coefficient residual " << worst << " over (a,b) in Z_d^2, d<=4 (tol 1e-9)";
  out.require(worst <= 1e-9, "residual");
}

// 4
void shift_as_braids(Outcome& out) {
  std::mt19937_64 rng(401);
  const AlgebraParams p(3);
  double worst = 0.0;
  for (int n = 2; n <= 3; ++n) {
    std::vector<BraidLetter> letters;
    for (int j = 1; j <= n; ++j) letters.push_back({j, 1});
    const auto chain = realize(BraidWord(letters), n + 1, p);
    for (int rep = 0; rep < 20; ++rep) {
      const auto x = testsupport::random_element(rng, p, 4, 5);
      worst = std::max(worst, adjoint_action(chain, x).distance(shift_alpha(x)));
    }
  }
  out.detail << "max residual " << worst << " on 20 random x per n in {2,3}, d=3 (tol 1e-9)";
  out.require(worst <= 1e-9, "residual");
}

// 5
void ergodic_bound(Outcome& out) {
  std::mt19937_64 rng(409);
  const int d = 3;
  const AlgebraParams p(d);
  std::uniform_int_distribution<std::int64_t> pick(1, monomial_count(d, 2) - 1);
  int probes = 0;
  double worst_ratio = 0.0, worst_gap_increase = -1.0;
  bool bound_ok = true, gap_ok = true;
  for (int s = 0; s < 4; ++s) {
    const ProductState phi(testsupport::block_state(d, d, rng));
    for (int rep = 0; rep < 10; ++rep) {
      const auto x = AlgebraElement::monomial(p, {monomial_at(pick(rng), d, 2), {}});
      const auto a = AlgebraElement::monomial(p, {monomial_at(pick(rng), d, 2), {}});
      double gap4 = 0.0, gap16 = 0.0;
      for (int k : {4, 8, 16}) {
        const auto r = tail_expectation_probe(x, a, phi, k);
        ++probes;
        bound_ok = bound_ok && r.observed <= r.bound && r.pass;
        worst_ratio = std::max(worst_ratio, r.observed / r.bound);
        if (k == 4) gap4 = r.gap;
        if (k == 16) gap16 = r.gap;
      }
      worst_gap_increase = std::max(worst_gap_increase, gap16 - gap4);
      gap_ok = gap_ok && gap16 <= gap4 + 1e-12;
    }
  }
  out.detail << probes << " probes, max observed/bound " << worst_ratio
             << ", max gap(16)-gap(4) " << worst_gap_increase << " (tol 1e-12)";
  out.require(bound_ok, "bound");
  out.require(gap_ok, "gap decay");
}

// 6
void factorization(Outcome& out) {
  std::mt19937_64 rng(419);
  const double product = factorization_test(product_state(testsupport::block_state(3, 3, rng), 3)).residual;

  const int d = 3;
  const AlgebraParams p(d);
  Matrix rho = Matrix::Zero(d, d), tau = Matrix::Zero(d, d);
  rho.diagonal() << 0.6, 0.3, 0.1;
  tau.diagonal() << 0.2, 0.3, 0.5;
  const double distance = (rho - tau).norm();
  const auto phi = mixture({{0.5, product_state(testsupport::density_functional(p, 1, rho), 2)},
                            {0.5, product_state(testsupport::density_functional(p, 1, tau), 2)}});
  const double mixed = factorization_test(phi).residual;

  // Brute-force oracle over per-block monomial pairs with the tensor density.
  const Matrix dense = 0.5 * (oracle::kron(rho, rho) + oracle::kron(tau, tau));
  double brute = 0.0;
  const std::int64_t n = monomial_count(d, 1);
  auto letters = [&](std::int64_t idx, int offset) {
    std::vector<std::pair<int, long long>> out;
    const Word w = monomial_at(idx, d, 1);
    for (const auto& l : w.letters()) out.emplace_back(l.strand + offset, l.exponent);
    return out;
  };
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      auto both = letters(i, 0);
      for (const auto& l : letters(j, 2)) both.push_back(l);
      const Complex joint = (dense * oracle::word(d, 2, both)).trace();
      const Complex a = (dense * oracle::word(d, 2, letters(i, 0))).trace();
      const Complex b = (dense * oracle::word(d, 2, letters(j, 2))).trace();
      brute = std::max(brute, std::abs(joint - a * b));
    }
  }
  out.detail << "product residual " << product << " (tol 1e-10); mixture residual " << mixed
             << " (>= 1e-4, |rho-tau|=" << distance << "), oracle " << brute;
  out.require(product <= 1e-10, "product");
  out.require(distance >= 0.1 && mixed >= 1e-4, "mixture");
  out.require(std::abs(mixed - brute) <= 1e-12, "oracle agreement");
}

// 7
void neutrality_admissibility(Outcome& out) {
  std::mt19937_64 rng(421);
  double braid = 0.0, neutral = 0.0;
  for (int d = 2; d <= 4; ++d) {
    const int p0 = charge_structure(d).p0;
    for (int m = 2; m <= 3; ++m) {
      for (int rep = 0; rep < 3; ++rep) {
        braid = std::max(braid, is_braid_invariant(product_state(testsupport::block_state(d, p0, rng), m)).residual);
        neutral = std::max(neutral, is_neutral(product_state(testsupport::block_state(d, d, rng), m)).residual);
      }
    }
  }
  const AlgebraParams p(4);
  const std::vector<RawLetter> two{{1, 1}, {2, 1}}, one{{1, 1}};
  const auto x2 = AlgebraElement::from_word(p, two);
  const auto x1 = AlgebraElement::from_word(p, one);
  const double even = cross_block_commutation(x2, x2, 0, 1);
  const double odd = cross_block_commutation(x1, x1, 0, 1);
  out.detail << "braid residual " << braid << " (tol 1e-9), neutrality " << neutral
             << " (tol 1e-10), d=4 charge-2 commutator " << even << ", charge-1 " << odd;
  out.require(braid <= 1e-9, "braid invariance");
  out.require(neutral <= 1e-10, "neutrality");
  out.require(even <= 1e-10 && odd >= 0.1, "cross-block");
}

// 8
void inverse_definetti(Outcome& out) {
  std::mt19937_64 rng(431);
  double single = 0.0, two_min = 1e300, cov_min = 1e300;
  bool flags = true;
  for (int d = 2; d <= 3; ++d) {
    for (int rep = 0; rep < 5; ++rep) {
      const Matrix a = testsupport::ginibre_density(d * d, rng);
      const Matrix b = testsupport::ginibre_density(d * d, rng);
      const auto r1 = dirac_check({{1.0, a}});
      const auto r2 = dirac_check({{0.4, a}, {0.6, b}});
      single = std::max(single, r1.residual);
      two_min = std::min(two_min, r2.residual);
      cov_min = std::min({cov_min, r1.covariance, r2.covariance});
      flags = flags && r1.is_dirac && !r2.is_dirac;
    }
  }
  out.detail << "single-point residual " << single << " (tol 1e-12), two-point min residual " << two_min
             << " (>= 1e-6), min covariance " << cov_min << " (>= -1e-10)";
  out.require(flags, "is_dirac flags");
  out.require(single <= 1e-12 && two_min >= 1e-6 && cov_min >= -1e-10, "residuals");
}

// 9
void charge_structure_check(Outcome& out) {
  int mismatches = 0;
  for (int d = 2; d <= 30; ++d) {
    const auto cs = charge_structure(d);
    if (cs.p0 != oracle::p0_brute_force(d)) ++mismatches;
    if (cs.square_free != oracle::square_free_by_trial_division(d)) ++mismatches;
  }
  out.detail << "p0 and square-free flag for 2<=d<=30, " << mismatches << " mismatches";
  out.require(mismatches == 0, "mismatch");
}

// 10
void gauss_phase_check(Outcome& out) {
  double omega = 0.0, roots = 0.0;
  for (int d = 2; d <= 12; ++d) {
    const AlgebraParams p(d);
    omega = std::max(omega, std::abs(std::abs(gauss_phase(p).omega) - 1.0));
    roots = std::max({roots, std::abs(p.zeta() * p.zeta() - p.q()),
                      std::abs(std::pow(p.zeta(), d * d) - 1.0)});
  }
  out.detail << "max ||omega|-1| " << omega << ", max zeta residual " << roots << " (tol 1e-12)";
  out.require(omega <= 1e-12 && roots <= 1e-12, "residual");
}

// 11
struct CliRun {
  int code = -1;
  nlohmann::json doc;
};

CliRun run_cli(const std::string& args) {
  CliRun r;
  const std::string cmd = std::string(PFBRAID_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::string text;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) text.append(buf.data(), n);
  r.code = WEXITSTATUS(pclose(pipe));
  r.doc = nlohmann::json::parse(text, nullptr, false);
  return r;
}

bool schema_valid(const CliRun& r) {
  const auto& j = r.doc;
  if (!j.is_object() || !j.contains("pass") || !j["pass"].is_boolean()) return false;
  if (r.code == 2) return j.contains("error") && j["error"].is_string();
  if (!j.contains("command") || !j.contains("params") || !j.contains("results") ||
      !j.contains("wall_time_ms") || !j["params"].is_object()) {
    return false;
  }
  for (const char* key : {"d", "m", "k", "tol"}) {
    if (!j["params"].contains(key)) return false;
  }
  return (r.code == 0) == j["pass"].get<bool>();
}

void parser_cli(Outcome& out, Clock::time_point suite_start) {
  std::mt19937_64 rng(433);
  int crashes = 0;
  std::uniform_int_distribution<int> byte(0, 255), len(0, 40);
  const std::string alphabet = "c b q i zeta omega alpha Ad star ( ) ^ ' + - . 0123456789";
  for (int rep = 0; rep < 100000; ++rep) {
    std::string s;
    for (int i = 0, n = len(rng); i < n; ++i) {
      s.push_back(rep % 2 ? static_cast<char>(byte(rng))
                          : alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)]);
    }
    try {
      expr::parse(s);
    } catch (const expr::ParseError&) {
    } catch (...) {
      ++crashes;
    }
  }

  const AlgebraParams p(3);
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const auto tree = testsupport::random_ast(rng, {3, 4, true});
    const Matrix lib = represent(expr::evaluate(*expr::parse(expr::print(*tree)), p), 2).matrix();
    const oracle::Mat ref = oracle::evaluate(*tree, 3, 2);
    worst = std::max(worst, oracle::max_abs(lib - ref) / std::max(1.0, oracle::max_abs(ref)));
  }

  const auto dir = std::filesystem::temp_directory_path() / ("pfbraid_acc_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto rho = testsupport::block_state(3, 3, rng);
  std::ofstream(dir / "rho.json") << io::functional_to_json(rho).dump();
  std::ofstream(dir / "prod.json") << io::functional_to_json(product_state(rho, 2)).dump();
  std::ofstream(dir / "mix.json")
      << io::mixture_to_json({2, 2, {{0.5, testsupport::ginibre_density(4, rng)},
                                     {0.5, testsupport::ginibre_density(4, rng)}}})
             .dump();
  const std::string rho_path = (dir / "rho.json").string();
  const std::vector<std::string> commands = {
      "verify-cpr --d 3 --pairs 2",
      "verify-braid --d 3 --pairs 3",
      "eval --d 3 --pairs 2 --expr 'c1 c2 - q c2 c1'",
      "eval --d 3 --expr 'Ad(b1)(c1)' --state " + (dir / "prod.json").string(),
      "charge --expr 'c2 + c3 c4'",
      "p0 --d 12",
      "invariant-solve --d 2 --pairs 2 --seed 3",
      "et-probe --d 3 --k 8 --x 'c1 c2^2' --a 'c1 c2^2' --state " + rho_path,
      "factorize --state " + (dir / "prod.json").string(),
      "dirac --mixture " + (dir / "mix.json").string(),
      "admissible --d 3 --state " + rho_path,
      "gns --state " + rho_path,
      "eval --d 3 --expr 'c1 +'",
      "bogus",
  };
  int invalid = 0;
  for (const auto& c : commands) invalid += schema_valid(run_cli(c)) ? 0 : 1;
  std::filesystem::remove_all(dir);

  const double elapsed = seconds_since(suite_start);
  out.detail << "fuzz 1e5 inputs, " << crashes << " crashes; eval vs oracle max rel error " << worst
             << " (tol 1e-9); " << commands.size() - invalid << "/" << commands.size()
             << " CLI runs schema-valid; suite " << elapsed << " s (limit 300 s)";
  out.require(crashes == 0, "fuzz");
  out.require(worst <= 1e-9, "oracle");
  out.require(invalid == 0, "schema");
  out.require(elapsed <= 300.0, "runtime");
}

}  // namespace

int main() {
  const auto suite_start = Clock::now();
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"CPR suite", cpr_suite},
      {"Braid relations", braid_relations},
      {"Pair exchange", pair_exchange},
      {"Shift as braids", shift_as_braids},
      {"Ergodic bound", ergodic_bound},
      {"Factorization", factorization},
      {"Neutrality and admissibility", neutrality_admissibility},
      {"Inverse de Finetti", inverse_definetti},
      {"Charge structure", charge_structure_check},
      {"Gauss phase", gauss_phase_check},
      {"Parser and CLI", [&](Outcome& o) { parser_cli(o, suite_start); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    failures += o.pass ? 0 : 1;
    std::printf("%-4s %2zu  %-30s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
