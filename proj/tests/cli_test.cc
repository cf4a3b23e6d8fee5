// Copyright 2026 The mcqw Authors
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

// End-to-end checks of the mcqw executable.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace {

struct CliRun {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with stdout captured; stderr is discarded.
CliRun Mcqw(const std::string& args) {
  const std::string cmd =
      std::string(MCQW_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun run;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return run;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) run.out.append(buf, n);
  const int status = pclose(pipe);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::filesystem::path TempPath(const std::string& name) {
  return std::filesystem::temp_directory_path() /
         ("mcqw_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

TEST(CliTest, SimulateDistributionSumsToOne) {
  const CliRun run = Mcqw("simulate --state psi6:delta=0.5 --steps 20");
  ASSERT_EQ(run.exit_code, 0);
  const auto lines = Lines(run.out);
  ASSERT_EQ(lines.front(), "site,probability");
  ASSERT_EQ(lines.size(), 1u + 61u);  // 2*20 + 21 sites
  double total = 0.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    total += std::stod(lines[i].substr(lines[i].find(',') + 1));
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(CliTest, ZeroStepsPutsAllWeightOnTheStartSite) {
  const CliRun run =
      Mcqw("simulate --state gammaGHZ:gamma=0.3 --steps 0 --lattice-size 5");
  ASSERT_EQ(run.exit_code, 0);
  EXPECT_EQ(run.out, "site,probability\n0,0\n1,0\n2,1\n3,0\n4,0\n");
}

TEST(CliTest, FileStateWithWrongCoinCountIsRejected) {
  const auto path = TempPath("bell.state");
  {
    std::ofstream f(path);
    f << "coins=2\n00 0.7071067811865476 0\n11 0.7071067811865476 0\n";
  }
  EXPECT_EQ(Mcqw("simulate --state file:" + path.string() + " --steps 2")
                .exit_code,
            0);
  EXPECT_EQ(Mcqw("simulate --state file:" + path.string() +
                 " --coins 3 --steps 2")
                .exit_code,
            1);
  std::filesystem::remove(path);
}

TEST(CliTest, BadInputsExitNonZero) {
  EXPECT_NE(Mcqw("simulate --state nosuch:x=1").exit_code, 0);
  EXPECT_NE(Mcqw("simulate --state psi6:delta=1 --active-qubit 4")
                .exit_code,
            0);
  EXPECT_NE(Mcqw("simulate --state psi6:delta=1 --steps 10 --lattice-size 20")
                .exit_code,
            0);
  EXPECT_NE(Mcqw("ctilde --t-max 3 --quad-points 4").exit_code, 0);
}

TEST(CliTest, CTildeAtZeroSteps) {
  const CliRun run = Mcqw("ctilde --t-max 0");
  ASSERT_EQ(run.exit_code, 0);
  EXPECT_EQ(run.out, "t,c1_tilde,c2_tilde\n0,0,0\n");
}

TEST(CliTest, OutputIsDeterministic) {
  const auto a = TempPath("a.csv");
  const auto b = TempPath("b.csv");
  const std::string args =
      "simulate --state random --coins 3 --seed 11 --steps 15 --out ";
  ASSERT_EQ(Mcqw(args + a.string()).exit_code, 0);
  ASSERT_EQ(Mcqw(args + b.string()).exit_code, 0);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  EXPECT_FALSE(sa.str().empty());
  EXPECT_EQ(sa.str(), sb.str());
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(CliTest, SweepWritesFitSummaryNextToOutput) {
  const auto out = TempPath("sweep.csv");
  ASSERT_EQ(Mcqw("sweep --family gammaGHZ --points 5 --steps 10 --out " +
                 out.string())
                .exit_code,
            0);
  const std::filesystem::path fit = out.string() + ".fit.json";
  EXPECT_TRUE(std::filesystem::exists(fit));
  std::filesystem::remove(out);
  std::filesystem::remove(fit);
}

TEST(CliTest, MeanCheckJsonReportsTheLaw) {
  const CliRun run = Mcqw(
      "meancheck --state gammaGHZ:gamma=0.4 --steps 10 --format json");
  ASSERT_EQ(run.exit_code, 0);
  EXPECT_NE(run.out.find("\"holds\": true"), std::string::npos);
}

}  // namespace
