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

#include "mcqw/io.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "mcqw/catalog.h"
#include "mcqw/error.h"
#include "mcqw/random_states.h"

namespace mcqw {
namespace {

TEST(FormatDoubleTest, RoundTrips) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(rng);
    ASSERT_EQ(std::stod(FormatDouble(v)), v);
  }
}

TEST(StateFileTest, ParsesBellState) {
  std::istringstream in(
      "# bell pair\n"
      "coins=2\n"
      "00 0.70710678118654752 0\n"
      "\n"
      "11 0.70710678118654752 0\n");
  const CoinState c = ReadStateFile(in);
  EXPECT_EQ(c.num_coins(), 2);
  EXPECT_NEAR(c[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(c[1], Complex(0.0));
  EXPECT_NEAR(c[3].real(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(StateFileTest, RoundTripPreservesAmplitudesExactly) {
  std::mt19937_64 rng(32);
  for (int m = 1; m <= 4; ++m) {
    const CoinState c = RandomCoinState(m, rng);
    std::stringstream buf;
    WriteStateFile(buf, c);
    const CoinState back = ReadStateFile(buf);
    for (std::size_t i = 0; i < c.dim(); ++i) {
      EXPECT_NEAR(std::abs(back[i] - c[i]), 0.0, 1e-15);
    }
  }
}

TEST(StateFileTest, Errors) {
  auto parse = [](const char* text) {
    std::istringstream in(text);
    return ReadStateFile(in);
  };
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("00 1 0\n"), ParseError);
  EXPECT_THROW(parse("coins=2\n0 1 0\n"), ParseError);
  EXPECT_THROW(parse("coins=2\n02 1 0\n"), ParseError);
  EXPECT_THROW(parse("coins=2\n00 1 0\n00 0 0\n"), ParseError);
  EXPECT_THROW(parse("coins=2\n00 1 x\n"), ParseError);
  EXPECT_THROW(parse("coins=1\n0 1 0\n1 1 0\n"), NormalizationError);
  // Within tolerance: silently renormalized.
  EXPECT_NO_THROW(parse("coins=1\n0 1.0000000001 0\n"));
  EXPECT_THROW(ReadStateFile(std::filesystem::path("/nonexistent/x.state")),
               ParseError);
}

TEST(StateSpecTest, Forms) {
  const StateSpec cat = ParseStateSpec("gammaGHZ:gamma=0.3");
  EXPECT_EQ(cat.kind, StateSpec::Kind::kCatalog);
  EXPECT_EQ(cat.family, "gammaGHZ");
  EXPECT_EQ(cat.params.at("gamma"), 0.3);
  const StateSpec two = ParseStateSpec("phi1:alpha3=0.25,split=0.8");
  EXPECT_EQ(two.params.size(), 2u);
  EXPECT_EQ(ParseStateSpec("file:bell.state").path, "bell.state");
  EXPECT_EQ(ParseStateSpec("random").kind, StateSpec::Kind::kRandom);
  EXPECT_THROW(ParseStateSpec("psi6:delta"), ParseError);
  EXPECT_THROW(ParseStateSpec("psi6:delta=1,delta=2"), ParseError);
  EXPECT_THROW(ParseStateSpec("psi6:delta=abc"), ParseError);
  EXPECT_THROW(ParseStateSpec("file:"), ParseError);
}

TEST(CsvTest, Headers) {
  const WalkState s(GammaGhz(0.3).coin, 5, 2);
  std::ostringstream dist, snap, prof;
  WriteDistributionCsv(dist, s);
  EXPECT_EQ(dist.str().substr(0, 17), "site,probability\n");
  EXPECT_NE(dist.str().find("\n2,1\n"), std::string::npos);
  WriteSnapshotCsv(snap, s);
  EXPECT_EQ(snap.str().substr(0, 22), "coin_index,site,re,im\n");
  WriteProfileCsv(prof, QLatticeProfile(s));
  EXPECT_NE(prof.str().find("\n0,0,\n"), std::string::npos);

  std::ostringstream ct;
  WriteCTildeCsv(ct, {{0, 0.0, 0.0}});
  EXPECT_EQ(ct.str(), "t,c1_tilde,c2_tilde\n0,0,0\n");
}

TEST(JsonTest, SweepAndFitSummaries) {
  SweepReport r;
  r.family = "gammaGHZ";
  r.param_name = "gamma";
  r.points.push_back({0.5, {1.0, 1.0, 1.0}, 0.0, 0.0, 3.0, 3.0});
  r.fit = FitResult{FitModel::kProportional, {202.6}, 1e-9};
  const auto doc = nlohmann::json::parse(SweepReportJson(r));
  EXPECT_EQ(doc["family"], "gammaGHZ");
  EXPECT_EQ(doc["points"].size(), 1u);
  EXPECT_EQ(doc["fit"]["model"], "proportional");

  std::ostringstream csv;
  WriteSweepCsv(csv, r);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')),
            "param,ic2_q1,ic2_q2,ic2_q3,mean_direct,mean_integral,"
            "second_moment,variance");

  const auto fit = nlohmann::json::parse(FitSummaryJson(*r.fit));
  EXPECT_EQ(fit["coefficients"][0], 202.6);
}

TEST(AtomicWriteTest, ReplacesContent) {
  const auto dir = std::filesystem::temp_directory_path() / "mcqw_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.csv";
  AtomicWriteFile(path, "first\n");
  AtomicWriteFile(path, "second\n");
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "second");
  int files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    (void)e;
    ++files;
  }
  EXPECT_EQ(files, 1);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace mcqw
