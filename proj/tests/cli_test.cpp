// Copyright 2026 The wfgcpe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include "wfgcpe/cli.hpp"

namespace wfgcpe::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "wfgcpe");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json invoke_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const auto r = invoke(std::move(args));
  EXPECT_EQ(r.code, kExitOk) << r.err;
  return nlohmann::json::parse(r.out);
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          ("wfgcpe_cli_" + std::to_string(::getpid()) + "_" + name))
      .string();
}

TEST(Cli, ComputeClosedForm) {
  const auto j = invoke_json(
      {"compute", "--dist", "power", "--b", "1", "--c", "2", "--weight", "x", "--gamma", "0.5"});
  ASSERT_EQ(j["rows"].size(), 1u);
  EXPECT_NEAR(j["rows"][0]["value"].get<double>(), 0.176776695296636881, 1e-15);
  EXPECT_EQ(j["rows"][0]["method"], "closed_form");
  EXPECT_EQ(j["metadata"]["tool"], "wfgcpe");
}

TEST(Cli, ComputeSeveralOrdersAndQuadrature) {
  const auto j = invoke_json({"compute", "--dist", "frechet", "--b", "1", "--c", "4",
                              "--weight", "x", "--gamma", "1", "--gamma", "1.5",
                              "--quadrature"});
  ASSERT_EQ(j["rows"].size(), 2u);
  EXPECT_NEAR(j["rows"][0]["value"].get<double>(), 0.443113462726379, 1e-9);
  EXPECT_EQ(j["rows"][0]["method"], "quadrature");
}

TEST(Cli, ExtremeOrderDoesNotCrash) {
  const auto r = invoke({"--format", "csv", "compute", "--dist", "power", "--b", "1",
                         "--c", "2", "--weight", "x", "--gamma", "1e9"});
  EXPECT_TRUE(r.code == kExitOk || r.code == kExitNonConvergence);
}

TEST(Cli, ConstraintViolationIsAUsageError) {
  const auto r = invoke({"compute", "--dist", "frechet", "--b", "1", "--c", "4",
                         "--weight", "x2", "--gamma", "0.5"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"compute", "--dist", "power", "--gamma", "1", "--bogus"}).code,
            kExitUsage);
  EXPECT_EQ(invoke({"compute", "--dist", "power", "--gamma", "-1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"reproduce", "--table", "9"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--format", "xml", "reproduce", "--table", "1"}).code, kExitUsage);
}

TEST(Cli, DataErrors) {
  EXPECT_EQ(invoke({"estimate", "--input", temp_path("missing"), "--gamma", "1"}).code,
            kExitData);
  const auto bad = temp_path("bad.csv");
  std::ofstream(bad) << "1\nx\n";
  const auto r = invoke({"estimate", "--input", bad, "--gamma", "1"});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  std::remove(bad.c_str());
}

TEST(Cli, EstimateBuiltinAndRoundTrip) {
  const auto direct = invoke_json({"estimate", "--input", "blood_cancer_43", "--weight",
                                   "sqrtx", "--gamma", "0.25"});
  const double v = direct["rows"][0]["value"].get<double>();
  EXPECT_NEAR(v / 24004.3, 1.0, 1e-2);
  EXPECT_EQ(direct["rows"][0]["method"], "empirical");
  EXPECT_EQ(direct["metadata"]["dataset_reading"], "corrected");

  for (const char* reading : {"literal", "corrected"}) {
    const auto path = temp_path(std::string(reading) + ".csv");
    const auto base = invoke_json({"estimate", "--input", "blood_cancer_43", "--reading",
                                   reading, "--weight", "x", "--gamma", "1.5",
                                   "--export", path});
    const auto again =
        invoke_json({"estimate", "--input", path, "--weight", "x", "--gamma", "1.5"});
    EXPECT_EQ(again["rows"][0]["value"].get<double>(),
              base["rows"][0]["value"].get<double>())
        << reading;
    std::remove(path.c_str());
  }
}

TEST(Cli, CustomWeightTable) {
  const auto knots = temp_path("knots.csv");
  std::ofstream(knots) << "0 0\n10 10\n";
  const auto custom = invoke_json({"compute", "--dist", "power", "--b", "1", "--c", "2",
                                   "--weight-custom", knots, "--gamma", "0.5"});
  EXPECT_NEAR(custom["rows"][0]["value"].get<double>(), 0.176776695296636881, 1e-9);
  std::remove(knots.c_str());
}

TEST(Cli, SimulationIsReproducibleFromPrintedSeed) {
  const auto first = invoke({"--format", "csv", "simulate", "--pop", "power-square",
                             "--n", "5", "--gamma", "0.25", "--replicates", "200"});
  ASSERT_EQ(first.code, kExitOk);
  const auto pos = first.err.find("seed: ");
  ASSERT_NE(pos, std::string::npos);
  const std::string seed = first.err.substr(pos + 6, first.err.find('\n', pos) - pos - 6);
  const auto again = invoke({"--format", "csv", "simulate", "--pop", "power-square",
                             "--n", "5", "--gamma", "0.25", "--replicates", "200",
                             "--seed", seed});
  EXPECT_EQ(again.out, first.out);
}

TEST(Cli, JsonSchemaIsStable) {
  const std::vector<std::string> args = {"simulate", "--pop", "self-weight", "--n", "8",
                                         "--gamma", "1", "--replicates", "50", "--seed",
                                         "1"};
  const auto a = invoke_json(args);
  auto other = args;
  other.back() = "2";
  const auto b = invoke_json(other);
  EXPECT_EQ(a["columns"], b["columns"]);
  ASSERT_EQ(a["rows"].size(), b["rows"].size());
  for (std::size_t i = 0; i < a["rows"].size(); ++i) {
    std::vector<std::string> ka, kb;
    for (const auto& [k, v] : a["rows"][i].items()) ka.push_back(k);
    for (const auto& [k, v] : b["rows"][i].items()) kb.push_back(k);
    EXPECT_EQ(ka, kb);
  }
}

TEST(Cli, ReproduceTables) {
  for (const char* table : {"1", "2"}) {
    const auto j = invoke_json({"reproduce", "--table", table});
    EXPECT_EQ(j["rows"].size(), 30u);
  }
  const auto t3 = invoke_json({"reproduce", "--table", "3", "--reading", "both"});
  EXPECT_EQ(t3["rows"].size(), 30u);
  EXPECT_EQ(t3["metadata"]["matching_readings"], "corrected");
  const auto t4 = invoke_json({"reproduce", "--table", "4"});
  EXPECT_EQ(t4["rows"].size(), 20u);
  for (const auto& row : t4["rows"]) {
    EXPECT_NEAR(row["mean"].get<double>(), row["reference_mean"].get<double>(), 5e-7);
  }
}

TEST(Cli, BoundsVerb) {
  const auto j = invoke_json({"bounds", "--dist", "power", "--b", "1", "--c", "2",
                              "--weight", "x", "--gamma", "1", "--prh-eta", "2"});
  bool saw_prh = false;
  for (const auto& row : j["rows"]) {
    if (row["bound"] == "prh") saw_prh = true;
    if (!row["applicable"].get<bool>() || row["bound"] == "entropy_exp") continue;
    EXPECT_TRUE(row["holds"].get<bool>()) << row;
  }
  EXPECT_TRUE(saw_prh);
}

TEST(Cli, PrettyIsSixDigits) {
  const auto r = invoke({"compute", "--dist", "power", "--b", "1", "--c", "2", "--weight",
                         "x", "--gamma", "0.5"});
  EXPECT_NE(r.out.find("0.176777"), std::string::npos);
  EXPECT_EQ(r.out.find("0.1767766"), std::string::npos);
}

TEST(Cli, Version) {
  const auto r = invoke({"--version"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("1.0.0"), std::string::npos);
}

}  // namespace
}  // namespace wfgcpe::cli
