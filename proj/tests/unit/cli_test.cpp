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

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include "../support/fixtures.hpp"
#include "pfbraid/state_io.hpp"

namespace {

using nlohmann::json;

struct Run {
  int code;
  json doc;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " PFBRAID_CLI_PATH " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), json::parse(out)};
}

void expect_envelope(const json& doc, const std::string& command) {
  ASSERT_TRUE(doc.is_object());
  EXPECT_EQ(doc.at("command"), command);
  ASSERT_TRUE(doc.at("params").is_object());
  for (const char* key : {"d", "m", "k", "tol"}) EXPECT_TRUE(doc.at("params").contains(key)) << key;
  EXPECT_TRUE(doc.at("results").is_object());
  EXPECT_TRUE(doc.at("pass").is_boolean());
  EXPECT_TRUE(doc.at("wall_time_ms").is_number());
}

void expect_error(const json& doc) {
  ASSERT_TRUE(doc.is_object());
  EXPECT_TRUE(doc.at("error").is_string());
  EXPECT_EQ(doc.at("pass"), false);
}

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = std::filesystem::temp_directory_path() / ("pfbraid_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
    std::mt19937_64 rng(233);
    using namespace pfbraid;
    write("neutral3.json", io::functional_to_json(testsupport::block_state(3, 3, rng)));
    write("charged3.json", io::density_to_json(
        (Matrix::Identity(3, 3) + 0.3 * (clock_shift(AlgebraParams(3)).second.matrix() +
                                         clock_shift(AlgebraParams(3)).second.matrix().adjoint())) / 3.0,
        3, 1));
    const auto rho = testsupport::block_state(2, 2, rng);
    const auto tau = testsupport::block_state(2, 2, rng);
    write("product.json", io::functional_to_json(product_state(rho, 2)));
    write("mixed.json", io::functional_to_json(
        mixture({{0.5, product_state(rho, 2)}, {0.5, product_state(tau, 2)}})));
    const Matrix a = testsupport::ginibre_density(4, rng);
    const Matrix b = testsupport::ginibre_density(4, rng);
    write("dirac.json", io::mixture_to_json({2, 2, {{1.0, a}}}));
    write("two_point.json", io::mixture_to_json({2, 2, {{0.5, a}, {0.5, b}}}));
    std::ofstream(dir_ / "broken.json") << "{ not json";
  }
  static void TearDownTestSuite() { std::filesystem::remove_all(dir_); }

  static void write(const std::string& name, const json& j) { std::ofstream(dir_ / name) << j.dump(); }
  static std::string path(const std::string& name) { return (dir_ / name).string(); }

  static std::filesystem::path dir_;
};

std::filesystem::path CliTest::dir_;

TEST_F(CliTest, P0) {
  const auto r = run("p0 --d 12");
  EXPECT_EQ(r.code, 0);
  expect_envelope(r.doc, "p0");
  EXPECT_EQ(r.doc["results"]["p0"], 6);
  EXPECT_EQ(r.doc["results"]["square_free"], false);
}

TEST_F(CliTest, VerifyCommands) {
  for (const char* cmd : {"verify-cpr --d 3 --pairs 2", "verify-braid --d 3 --pairs 3",
                          "verify-braid --d 2 --pairs 4"}) {
    const auto r = run(cmd);
    EXPECT_EQ(r.code, 0) << cmd;
    expect_envelope(r.doc, std::string(cmd).substr(0, std::string(cmd).find(' ')));
    EXPECT_EQ(r.doc["pass"], true);
  }
}

TEST_F(CliTest, EvalZeroAndState) {
  auto r = run("eval --d 3 --pairs 2 --expr 'c1 c2 - q c2 c1'");
  EXPECT_EQ(r.code, 0);
  expect_envelope(r.doc, "eval");
  EXPECT_EQ(r.doc["results"]["is_zero"], true);
  EXPECT_EQ(r.doc["results"]["text"], "0");

  r = run("eval --d 3 --expr 'c1 c2^2' --state " + path("neutral3.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.doc["results"]["value"].is_array());

  r = run("eval --d 3 --pairs 1 --expr 'c3'");
  EXPECT_EQ(r.code, 2);
  expect_error(r.doc);

  r = run("eval --d 3 --expr 'c1 +'");
  EXPECT_EQ(r.code, 2);
  expect_error(r.doc);
  EXPECT_EQ(r.doc["offset"], 4);
}

TEST_F(CliTest, Charge) {
  const auto r = run("charge --expr 'c2 + c3 c4'");
  EXPECT_EQ(r.code, 0);
  expect_envelope(r.doc, "charge");
  EXPECT_EQ(r.doc["results"]["degree"], "mixed");
  EXPECT_EQ(r.doc["results"]["components"].size(), 2u);
}

TEST_F(CliTest, InvariantSolveIsDeterministic) {
  const auto a = run("invariant-solve --d 2 --pairs 2 --seed 5");
  const auto b = run("invariant-solve --d 2 --pairs 2 --seed 5");
  EXPECT_EQ(a.code, 0);
  expect_envelope(a.doc, "invariant-solve");
  EXPECT_EQ(a.doc["results"]["density"], b.doc["results"]["density"]);
  EXPECT_LE(a.doc["results"]["commutator_residual"].get<double>(), 1e-8);
}

TEST_F(CliTest, EtProbe) {
  const auto r = run("et-probe --d 3 --k 8 --x 'c1 c2^2' --a 'c1 c2^2 c3 c4^2' --state " + path("neutral3.json"));
  EXPECT_EQ(r.code, 0);
  expect_envelope(r.doc, "et-probe");
  EXPECT_LE(r.doc["results"]["residuals"]["observed"].get<double>(), r.doc["results"]["bound"].get<double>());
}

TEST_F(CliTest, FactorizeAndGns) {
  auto r = run("factorize --state " + path("product.json"));
  EXPECT_EQ(r.code, 0);
  expect_envelope(r.doc, "factorize");
  r = run("factorize --state " + path("mixed.json"));
  EXPECT_EQ(r.code, 1);
  expect_envelope(r.doc, "factorize");
  r = run("gns --state " + path("product.json"));
  EXPECT_EQ(r.code, 0);
  expect_envelope(r.doc, "gns");
}

TEST_F(CliTest, Dirac) {
  auto r = run("dirac --mixture " + path("dirac.json"));
  EXPECT_EQ(r.code, 0);
  expect_envelope(r.doc, "dirac");
  r = run("dirac --mixture " + path("two_point.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.doc["results"]["is_dirac"], false);
}

TEST_F(CliTest, Admissible) {
  auto r = run("admissible --d 3 --state " + path("neutral3.json"));
  EXPECT_EQ(r.code, 0);
  expect_envelope(r.doc, "admissible");
  r = run("admissible --d 3 --state " + path("charged3.json"));
  EXPECT_EQ(r.code, 1);
  expect_envelope(r.doc, "admissible");
}

TEST_F(CliTest, ToleranceOverrides) {
  auto r = run("verify-cpr --d 3 --pairs 1", "PF_TOL=1e-3");
  EXPECT_DOUBLE_EQ(r.doc["params"]["tol"].get<double>(), 1e-3);
  r = run("verify-cpr --d 3 --pairs 1 --tol 1e-4", "PF_TOL=1e-3");
  EXPECT_DOUBLE_EQ(r.doc["params"]["tol"].get<double>(), 1e-4);
  r = run("verify-cpr --d 3 --pairs 1", "PF_TOL=abc");
  EXPECT_EQ(r.code, 2);
  expect_error(r.doc);
}

TEST_F(CliTest, UsageErrorsStillEmitJson) {
  const std::vector<std::string> cases = {"", "bogus", "p0", "verify-cpr --d 1 --pairs 1", "eval --d 3",
                                 "factorize --state /nonexistent.json",
                                 "factorize --state " + path("broken.json"),
                                 "verify-cpr --d 6 --pairs 6", "verify-braid --d 3 --pairs 1",
                                 "admissible --d 2 --state " + path("neutral3.json")};
  for (const auto& args : cases) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 2) << args;
    expect_error(r.doc);
  }
}

}  // namespace
