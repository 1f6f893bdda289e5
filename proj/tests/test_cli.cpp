// Copyright 2026 The Authors.
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

// Runs the command-line binary.
#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "combcontract/io.hpp"

namespace {

struct CliRun {
  int exit = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(CC_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(CC_TEST_DATA) + "/" + name; }

std::string tempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("combcontract_cli_" + name)).string();
}

std::string column(const std::string& csv, const std::string& name, int row = 1) {
  std::istringstream in(csv);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  const auto& head = rows.at(0);
  const auto it = std::find(head.begin(), head.end(), name);
  return rows.at(row).at(it - head.begin());
}

}  // namespace

TEST(Cli, SolveWithinFactorOfBrute) {
  const CliRun solve = run("solve --instance " + data("additive_2x2.json") + " --objective profit --eps 0.1 --format csv");
  ASSERT_EQ(solve.exit, 0);
  const CliRun brute = run("brute --instance " + data("additive_2x2.json") + " --objective profit --format csv");
  ASSERT_EQ(brute.exit, 0);
  using combcontract::Rational;
  const Rational got = Rational::parse(column(solve.out, "value"));
  const Rational opt = Rational::parse(column(brute.out, "value"));
  EXPECT_GE(got, Rational(9, 10) * opt);
  EXPECT_EQ(column(solve.out, "solver"), "additive-fptas");
}

TEST(Cli, VerifyGoodContract) {
  const CliRun good = run("good-contract --n 4 --budget 1/2");
  ASSERT_EQ(good.exit, 0);
  const auto j = combcontract::Json::parse(good.out);
  const std::string contract = tempPath("contract.json");
  const std::string profile = tempPath("profile.json");
  const std::string instance = tempPath("hardness.json");
  std::ofstream(contract) << j["contract"].dump();
  std::ofstream(profile) << j["profile"].dump();
  std::ofstream(instance) << R"({"reward": {"type": "hardness", "n": 4, "budget": "1/2", "hidden": [0, 1]}})";
  const CliRun ne = run("verify-ne --instance " + instance + " --contract @" + contract + " --profile @" + profile);
  ASSERT_EQ(ne.exit, 0);
  EXPECT_TRUE(combcontract::Json::parse(ne.out)["nash"].get<bool>()) << ne.out;
}

TEST(Cli, ExperimentRows) {
  const CliRun r = run("hardness-experiment --n 8 --trials 100 --seed 3");
  ASSERT_EQ(r.exit, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 101);
  EXPECT_EQ(run("hardness-experiment --n 8 --trials 100 --seed 3").out, r.out);
}

TEST(Cli, GapReport) {
  const CliRun r = run("gap-report --n 4 --budget 1/2 --eps 1/100");
  ASSERT_EQ(r.exit, 0);
  const auto j = combcontract::Json::parse(r.out);
  EXPECT_TRUE(j["holds"].get<bool>());
  EXPECT_EQ(j["gapRatio"], "25/4");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("solve --instance /nonexistent/x.json").exit, 1);
  EXPECT_EQ(run("solve").exit, 2);
  EXPECT_EQ(run("frobnicate").exit, 2);
  EXPECT_EQ(run("solve --instance " + data("additive_2x2.json") + " --force-solver single-agent-fptas").exit, 1);
  EXPECT_EQ(run("solve --instance " + data("additive_2x2.json") + " --budget 1/0").exit, 1);
}
