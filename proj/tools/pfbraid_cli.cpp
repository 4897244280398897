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

// Command-line front end.  Every invocation prints one JSON document on
// stdout.  Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or
// input error.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "pfbraid/definetti.hpp"
#include "pfbraid/expr.hpp"
#include "pfbraid/linalg.hpp"
#include "pfbraid/report.hpp"
#include "pfbraid/state_io.hpp"

namespace {

using pfbraid::report::Envelope;
using json = nlohmann::json;
namespace pf = pfbraid;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  int d = 3;
  int pairs = 2;
  int k = 4;
  std::optional<double> tol;
  std::uint64_t seed = 1;
  std::string expr;
  std::string x;
  std::string a;
  std::string state;
  std::string mixture;
};

double resolve_tol(const Options& o, double fallback) {
  if (o.tol) return *o.tol;
  if (const char* env = std::getenv("PF_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
    throw UsageError("PF_TOL must be a positive number");
  }
  return fallback;
}

pf::AlgebraElement parse_element(const std::string& text, const pf::AlgebraParams& params) {
  return pf::expr::evaluate(*pf::expr::parse(text), params);
}

double frob(const pf::Matrix& m) { return m.norm(); }

// --- subcommands ----------------------------------------------------------

Envelope verify_cpr(const Options& o) {
  Envelope env{"verify-cpr", o.d, o.pairs};
  env.tol = resolve_tol(o, 1e-10);
  const pf::AlgebraParams params(o.d);
  const int n = 2 * o.pairs;
  std::vector<pf::Matrix> u;
  for (int j = 1; j <= n; ++j) u.push_back(pf::represent_generator(j, o.pairs, params).matrix());
  const auto dim = u.front().rows();
  const pf::Matrix eye = pf::Matrix::Identity(dim, dim);
  double cpr = 0.0, order = 0.0, unitary = 0.0;
  for (int j = 0; j < n; ++j) {
    pf::Matrix power = eye;
    for (int e = 0; e < o.d; ++e) power = power * u[j];
    order = std::max(order, frob(power - eye));
    unitary = std::max(unitary, frob(u[j].adjoint() * u[j] - eye));
    for (int k = j + 1; k < n; ++k) cpr = std::max(cpr, frob(u[j] * u[k] - params.q() * u[k] * u[j]));
  }
  env.results = {{"generators", n}, {"max_cpr_residual", cpr}, {"max_order_residual", order},
                 {"max_unitarity_residual", unitary}};
  env.pass = cpr <= env.tol && order <= env.tol && unitary <= env.tol;
  return env;
}

Envelope verify_braid(const Options& o) {
  Envelope env{"verify-braid", o.d, o.pairs};
  env.tol = resolve_tol(o, 1e-9);
  if (o.pairs < 2) throw UsageError("verify-braid needs --pairs >= 2");
  const pf::AlgebraParams params(o.d);
  const int m = o.pairs;
  std::vector<pf::Matrix> b;
  for (int j = 1; j < m; ++j) b.push_back(pf::four_string_braid(j, m, params).op.matrix());
  const auto dim = b.front().rows();
  const pf::Matrix eye = pf::Matrix::Identity(dim, dim);
  double unitary = 0.0, exchange = 0.0, braid_rel = 0.0, far = 0.0, shift = 0.0;
  for (int j = 1; j < m; ++j) {
    unitary = std::max(unitary, frob(b[j - 1].adjoint() * b[j - 1] - eye));
    const pf::BraidUnitary bj{pf::BraidWord({{j, 1}}), pf::Operator(params, m, b[j - 1])};
    for (int s = 0; s < o.d; ++s) {
      for (int t = 0; t < o.d; ++t) {
        const std::vector<pf::RawLetter> src{{2 * j - 1, s}, {2 * j, t}};
        const std::vector<pf::RawLetter> dst{{2 * j + 1, s}, {2 * j + 2, t}};
        const auto image = pf::adjoint_action(bj, pf::AlgebraElement::from_word(params, src), 0.0);
        exchange = std::max(exchange, image.distance(pf::AlgebraElement::from_word(params, dst)));
      }
    }
  }
  for (int j = 1; j + 1 < m; ++j) {
    braid_rel = std::max(braid_rel, frob(b[j - 1] * b[j] * b[j - 1] - b[j] * b[j - 1] * b[j]));
  }
  for (int j = 1; j < m; ++j) {
    for (int k = j + 2; k < m; ++k) far = std::max(far, frob(b[j - 1] * b[k - 1] - b[k - 1] * b[j - 1]));
  }
  pf::Matrix chain = eye;
  for (const auto& bj : b) chain = chain * bj;
  const pf::BraidUnitary all{pf::BraidWord(), pf::Operator(params, m, chain)};
  for (int s = 0; s < o.d; ++s) {
    for (int t = 0; t < o.d; ++t) {
      const std::vector<pf::RawLetter> w{{1, s}, {2, t}};
      const auto x = pf::AlgebraElement::from_word(params, w);
      shift = std::max(shift, pf::adjoint_action(all, x, 0.0).distance(pf::shift_alpha(x, 1)));
    }
  }
  env.results = {{"max_unitarity_residual", unitary}, {"max_exchange_residual", exchange},
                 {"max_braid_relation_residual", braid_rel}, {"max_far_commutation_residual", far},
                 {"shift_residual", shift}};
  env.pass = unitary <= env.tol && exchange <= env.tol && braid_rel <= env.tol && far <= env.tol &&
             shift <= env.tol;
  return env;
}

Envelope eval_command(const Options& o, bool pairs_given) {
  Envelope env{"eval", o.d};
  if (pairs_given) env.m = o.pairs;
  env.tol = resolve_tol(o, 1e-10);
  const pf::AlgebraParams params(o.d);
  const auto element = parse_element(o.expr, params);
  if (pairs_given && element.blocks_required() > o.pairs) {
    throw UsageError("expression reaches strand " + std::to_string(element.max_strand()) +
                     " beyond 2m = " + std::to_string(2 * o.pairs));
  }
  env.results = pf::io::element_to_json(element);
  env.results["is_zero"] = element.pruned(env.tol).is_zero();
  const auto deg = pf::degree(element);
  env.results["degree"] = std::holds_alternative<pf::Charge>(deg)
                              ? json(std::get<pf::Charge>(deg).value())
                              : json("mixed");
  if (!o.state.empty()) {
    const auto phi = pf::io::state_from_json(pf::io::read_json_file(o.state));
    if (phi.params() != params) throw UsageError("state file has a different d");
    env.results["value"] = pf::io::complex_to_json(pf::evaluate(phi, element));
  }
  env.pass = true;
  return env;
}

Envelope charge_command(const Options& o) {
  Envelope env{"charge", o.d};
  env.tol = resolve_tol(o, 1e-10);
  const pf::AlgebraParams params(o.d);
  const auto element = parse_element(o.expr, params);
  const auto deg = pf::degree(element);
  json comps = json::object();
  for (const auto& [ell, c] : pf::charge_components(element)) comps[std::to_string(ell)] = c.to_string();
  env.results = {{"expr", o.expr},
                 {"degree", std::holds_alternative<pf::Charge>(deg)
                                ? json(std::get<pf::Charge>(deg).value())
                                : json("mixed")},
                 {"homogeneous", std::holds_alternative<pf::Charge>(deg)},
                 {"components", comps}};
  env.pass = true;
  return env;
}

Envelope p0_command(const Options& o) {
  Envelope env{"p0", o.d};
  env.tol = resolve_tol(o, 0.0);
  env.results = pf::report::to_json(pf::charge_structure(o.d));
  env.pass = true;
  return env;
}

pf::Matrix random_density(std::int64_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  pf::Matrix g(dim, dim);
  for (std::int64_t r = 0; r < dim; ++r) {
    for (std::int64_t c = 0; c < dim; ++c) g(r, c) = {normal(rng), normal(rng)};
  }
  pf::Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

Envelope invariant_solve(const Options& o) {
  Envelope env{"invariant-solve", o.d, o.pairs};
  env.tol = resolve_tol(o, 1e-8);
  const pf::AlgebraParams params(o.d);
  std::mt19937_64 rng(o.seed);
  const auto dim = pf::checked_dimension(o.d, o.pairs);
  const pf::DensityState input(pf::Operator(params, o.pairs, random_density(dim, rng)));
  const auto fixed = pf::fixed_point_algebra(o.pairs, params);
  const auto projected = pf::invariant_project(input);
  const auto phi = pf::density_to_functional(projected.density);
  const double min_eig = pf::linalg::min_eigenvalue(projected.density.matrix());
  env.results = {{"seed", o.seed},
                 {"commutant_dim", fixed.dim},
                 {"charge_support", fixed.charge_support},
                 {"m0_estimate", fixed.m0_estimate},
                 {"commutator_residual", projected.commutator_residual},
                 {"min_eigenvalue", min_eig},
                 {"trace", projected.density.matrix().trace().real()},
                 {"twirled", projected.twirled},
                 {"neutrality_residual", pf::is_neutral(phi).residual},
                 {"density", pf::io::density_to_json(projected.density.matrix(), o.d, o.pairs)}};
  env.pass = projected.commutator_residual <= env.tol && min_eig >= -1e-9;
  return env;
}

pf::StateFunctional load_single_block(const std::string& path, int d) {
  const auto rho = pf::io::state_from_json(pf::io::read_json_file(path));
  if (rho.params().d() != d) throw UsageError("state file has d = " + std::to_string(rho.params().d()));
  if (rho.blocks() != 1) throw UsageError("state file must describe one block");
  return rho;
}

Envelope et_probe(const Options& o) {
  Envelope env{"et-probe", o.d, std::nullopt, o.k};
  env.tol = resolve_tol(o, 1e-10);
  const pf::AlgebraParams params(o.d);
  const pf::ProductState phi(load_single_block(o.state, o.d));
  const auto x = parse_element(o.x, params);
  const auto a = parse_element(o.a, params);
  const auto r = pf::tail_expectation_probe(x, a, phi, o.k);
  env.m = r.m;
  env.results = pf::report::to_json(r, o.d);
  env.pass = r.pass;
  return env;
}

Envelope factorize(const Options& o) {
  const auto phi = pf::io::state_from_json(pf::io::read_json_file(o.state));
  Envelope env{"factorize", phi.params().d(), phi.blocks()};
  env.tol = resolve_tol(o, 1e-10);
  const auto r = pf::factorization_test(phi);
  env.results = pf::report::to_json(r, phi.params().d(), phi.blocks(), env.tol);
  env.pass = r.residual <= env.tol;
  return env;
}

Envelope dirac(const Options& o) {
  const auto mix = pf::io::mixture_from_json(pf::io::read_json_file(o.mixture));
  Envelope env{"dirac", mix.d, mix.m};
  env.tol = resolve_tol(o, 1e-8);
  const auto r = pf::dirac_check(mix.components, env.tol, env.tol);
  env.results = pf::report::to_json(r, mix.d, mix.m, env.tol, env.tol);
  env.pass = r.is_dirac;
  return env;
}

Envelope admissible(const Options& o) {
  Envelope env{"admissible", o.d, 1};
  env.tol = resolve_tol(o, 1e-10);
  const auto rho = load_single_block(o.state, o.d);
  const auto r = pf::admissibility_check(rho, env.tol);
  env.results = pf::report::to_json(r, o.d);
  env.pass = r.admissible;
  return env;
}

Envelope gns_command(const Options& o) {
  const auto phi = pf::io::state_from_json(pf::io::read_json_file(o.state));
  const auto& params = phi.params();
  Envelope env{"gns", params.d(), phi.blocks()};
  env.tol = resolve_tol(o, 1e-8);
  const auto data = pf::gns(phi);
  double expectation = 0.0;
  for (std::size_t idx = 0; idx < phi.values().size(); ++idx) {
    const auto w = pf::monomial_at(static_cast<std::int64_t>(idx), params.d(), phi.blocks());
    expectation = std::max(expectation, std::abs(pf::gns_expectation(data, w) - phi.values()[idx]));
  }
  double cpr = 0.0;
  for (std::size_t j = 0; j < data.rep.size(); ++j) {
    for (std::size_t k = j + 1; k < data.rep.size(); ++k) {
      cpr = std::max(cpr, frob(data.rep[j] * data.rep[k] - params.q() * data.rep[k] * data.rep[j]));
    }
  }
  env.results = {{"dim", data.dim}, {"expectation_residual", expectation}, {"cpr_residual", cpr},
                 {"cyclic_vector_norm", data.cyclic_vector.norm()}};
  env.pass = expectation <= env.tol && cpr <= env.tol;
  return env;
}

json error_document(const std::string& command, const std::string& message) {
  return {{"command", command}, {"error", message}, {"pass", false}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parafermion braid and de Finetti toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "Tolerance override (PF_TOL also works)");
  };
  auto add_d = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--d", o.d, "Algebra order d")->check(CLI::Range(2, 64));
    if (required) opt->required();
  };
  auto add_pairs = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--pairs", o.pairs, "Number of blocks m")->check(CLI::Range(1, 12));
    if (required) opt->required();
    return opt;
  };

  auto* cpr = app.add_subcommand("verify-cpr", "Check the commutation relations of the representation");
  add_d(cpr, true);
  add_pairs(cpr, true);
  add_common(cpr);

  auto* braid = app.add_subcommand("verify-braid", "Check braid unitarity, exchange and relations");
  add_d(braid, true);
  add_pairs(braid, true);
  add_common(braid);

  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  add_d(eval, true);
  auto* eval_pairs = add_pairs(eval, false);
  eval->add_option("--expr", o.expr, "Expression")->required();
  eval->add_option("--state", o.state, "State file for evaluation");
  add_common(eval);

  auto* charge = app.add_subcommand("charge", "Charge decomposition of an expression");
  add_d(charge, false);
  charge->add_option("--expr", o.expr, "Expression")->required();
  add_common(charge);

  auto* p0 = app.add_subcommand("p0", "Charge structure of Z_d");
  p0->add_option("--d", o.d, "Algebra order d")->required()->check(CLI::Range(2, 1000000));
  add_common(p0);

  auto* inv = app.add_subcommand("invariant-solve", "Project a random density onto the braid commutant");
  add_d(inv, true);
  add_pairs(inv, true);
  inv->add_option("--seed", o.seed, "Random seed");
  add_common(inv);

  auto* probe = app.add_subcommand("et-probe", "Shift-average probe against the 2m/k bound");
  add_d(probe, true);
  probe->add_option("--k", o.k, "Averaging depth")->required()->check(CLI::Range(1, 100000));
  probe->add_option("--x", o.x, "Element x")->required();
  probe->add_option("--a", o.a, "Element A")->required();
  probe->add_option("--state", o.state, "One-block product factor")->required();
  add_common(probe);

  auto* fact = app.add_subcommand("factorize", "Product-state factorization residual");
  fact->add_option("--state", o.state, "State file")->required();
  add_common(fact);

  auto* dir = app.add_subcommand("dirac", "Inverse de Finetti test on a mixture");
  dir->add_option("--mixture", o.mixture, "Mixture file")->required();
  add_common(dir);

  auto* adm = app.add_subcommand("admissible", "Charge admissibility of a one-block state");
  add_d(adm, true);
  adm->add_option("--state", o.state, "State file")->required();
  add_common(adm);

  auto* gns = app.add_subcommand("gns", "GNS construction of a state");
  gns->add_option("--state", o.state, "State file")->required();
  add_common(gns);

  std::string command = "pfbraid";
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cerr << app.help();
    std::cout << error_document(command, "help requested").dump(2) << std::endl;
    return 0;
  } catch (const CLI::ParseError& e) {
    if (!app.get_subcommands().empty()) command = app.get_subcommands().front()->get_name();
    std::cout << error_document(command, e.what()).dump(2) << std::endl;
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  command = sub->get_name();
  const std::map<std::string, std::function<Envelope()>> handlers = {
      {"verify-cpr", [&] { return verify_cpr(o); }},
      {"verify-braid", [&] { return verify_braid(o); }},
      {"eval", [&] { return eval_command(o, eval_pairs->count() > 0); }},
      {"charge", [&] { return charge_command(o); }},
      {"p0", [&] { return p0_command(o); }},
      {"invariant-solve", [&] { return invariant_solve(o); }},
      {"et-probe", [&] { return et_probe(o); }},
      {"factorize", [&] { return factorize(o); }},
      {"dirac", [&] { return dirac(o); }},
      {"admissible", [&] { return admissible(o); }},
      {"gns", [&] { return gns_command(o); }},
  };

  const auto start = std::chrono::steady_clock::now();
  try {
    Envelope env = handlers.at(command)();
    env.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << env.to_json().dump(2) << std::endl;
    return env.pass ? 0 : 1;
  } catch (const pf::expr::ParseError& e) {
    json doc = error_document(command, e.what());
    doc["offset"] = e.offset();
    std::cout << doc.dump(2) << std::endl;
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cout << error_document(command, e.what()).dump(2) << std::endl;
    return 2;
  } catch (const std::out_of_range& e) {
    std::cout << error_document(command, e.what()).dump(2) << std::endl;
    return 2;
  } catch (const std::length_error& e) {
    std::cout << error_document(command, e.what()).dump(2) << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cout << error_document(command, e.what()).dump(2) << std::endl;
    return 1;
  }
}
