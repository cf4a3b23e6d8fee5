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

#include "mcqw/catalog.h"

#include <cmath>

#include "gtest/gtest.h"
#include "mcqw/entanglement.h"
#include "mcqw/error.h"
#include "mcqw/lab.h"

namespace mcqw {
namespace {

const double kS = 1.0 / std::sqrt(2.0);

void ExpectClosedFormsMatch(const CatalogEntry& e) {
  ASSERT_EQ(static_cast<int>(e.expected_ic_squared.size()),
            e.coin.num_coins());
  EXPECT_NEAR(e.coin.SquaredNorm(), 1.0, 1e-12) << e.name;
  for (int q = 1; q <= e.coin.num_coins(); ++q) {
    EXPECT_NEAR(IConcurrenceSquared(e.coin, q), e.expected_ic_squared[q - 1],
                1e-12)
        << e.name << " qubit " << q;
  }
}

TEST(GammaGhzTest, Examples) {
  const CatalogEntry one = GammaGhz(1.0);
  EXPECT_EQ(one.coin[0], Complex(1.0));
  EXPECT_EQ(IConcurrence(one.coin, 2), 0.0);
  EXPECT_NEAR(GammaGhz(kS).expected_ic_squared[0], 1.0, 1e-15);
  for (double v : GammaGhz(0.3).expected_ic_squared) {
    EXPECT_NEAR(v, 0.3276, 1e-15);
  }
  EXPECT_EQ(one.entanglement_class, EntanglementClass::kPure);
  EXPECT_THROW(GammaGhz(1.1), DimensionError);
  EXPECT_THROW(GammaGhz(-0.1), DimensionError);
}

TEST(Psi6Test, DeltaTwoPoint) {
  const KappaParams k = Kappas(2.0);
  EXPECT_NEAR(k.eta, 2 * std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(k.chi, 2 * std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(k.kappa1, 0.5, 1e-15);
  EXPECT_NEAR(k.kappa2, -kS, 1e-15);
  const CatalogEntry e = Psi6(2.0);
  EXPECT_NEAR(e.expected_ic_squared[1], 1.0, 1e-14);
  EXPECT_NEAR(e.expected_ic_squared[0], 0.75, 1e-14);
  EXPECT_NEAR(e.expected_ic_squared[2], 0.75, 1e-14);
  EXPECT_EQ(e.entanglement_class, EntanglementClass::kPure);
}

TEST(Psi6Test, NormIdentityOnDenseGrid) {
  for (double d : UniformGrid(-10.0, 10.0, 2001)) {
    const KappaParams k = Kappas(d);
    ASSERT_NEAR(2 * k.kappa1 * k.kappa1 + k.kappa2 * k.kappa2, 1.0, 1e-12) << d;
    ASSERT_LT(k.kappa2, 0.0);
  }
}

TEST(Psi78Test, AmplitudesAtDeltaTwo) {
  const CatalogEntry e = Psi78(2.0);
  EXPECT_NEAR(e.coin.SquaredNorm(), 1.0, 1e-12);
  const double k1 = 0.5 * kS, k2 = -kS * kS;
  EXPECT_NEAR(e.coin[0b001].real(), k1, 1e-15);
  EXPECT_NEAR(e.coin[0b010].real(), k2, 1e-15);
  EXPECT_NEAR(e.coin[0b011].real(), k1, 1e-15);
  EXPECT_NEAR(e.coin[0b100].real(), k1, 1e-15);
  EXPECT_NEAR(e.coin[0b101].real(), k2, 1e-15);
  EXPECT_NEAR(e.coin[0b110].real(), k1, 1e-15);
  EXPECT_EQ(e.coin[0b000], Complex(0.0));
  EXPECT_EQ(e.entanglement_class, EntanglementClass::kMixed);
}

TEST(Phi1Test, Examples) {
  const CatalogEntry a = Phi1(0.6, 0.8, 0.0);
  EXPECT_EQ(IConcurrence(a.coin, 1), 0.0);
  EXPECT_EQ(IConcurrence(a.coin, 3), 0.0);
  const CatalogEntry b = Phi1(0.0, 0.0, kS);
  EXPECT_NEAR(IConcurrenceSquared(b.coin, 1), 1.0, 1e-12);
  EXPECT_NEAR(IConcurrenceSquared(b.coin, 3), 1.0, 1e-12);
  EXPECT_THROW(Phi1(0.5, 0.5, 0.6), NormalizationError);
  EXPECT_EQ(a.entanglement_class, EntanglementClass::kPure);
}

TEST(Phi2Test, Examples) {
  const CatalogEntry e = Phi2(0.5, 0.0);
  EXPECT_NEAR(e.coin.SquaredNorm(), 1.0, 1e-15);
  EXPECT_THROW(Phi2(0.5, 0.5), NormalizationError);
  EXPECT_EQ(e.entanglement_class, EntanglementClass::kMixed);
}

TEST(CatalogPropertyTest, ClosedFormsOverParameterGrids) {
  for (double g : UniformGrid(0.0, 1.0, 41)) ExpectClosedFormsMatch(GammaGhz(g));
  for (double d : UniformGrid(-10.0, 10.0, 41)) {
    ExpectClosedFormsMatch(Psi6(d));
    ExpectClosedFormsMatch(Psi78(d));
  }
  for (double a3 : UniformGrid(0.0, kS, 21)) {
    for (double split : {0.0, 0.3, 0.5, 1.0}) {
      ExpectClosedFormsMatch(Phi1Split(a3, split));
    }
  }
  for (double b1 : UniformGrid(0.0, 0.5, 21)) {
    ExpectClosedFormsMatch(Phi2FromBeta1(b1));
  }
}

TEST(CatalogPropertyTest, DesignatedReductionsAreDiagonal) {
  auto check = [](const CatalogEntry& e) {
    for (int q = 1; q <= e.coin.num_coins(); ++q) {
      EXPECT_LT(std::abs(ReduceToQubit(e.coin, q)(0, 1)), 1e-12)
          << e.name << " qubit " << q;
    }
  };
  for (double g : UniformGrid(0.0, 1.0, 11)) check(GammaGhz(g));
  for (double d : UniformGrid(-10.0, 10.0, 11)) check(Psi6(d));
  for (double a3 : UniformGrid(0.0, kS, 11)) check(Phi1Split(a3, 0.3));
  for (double b1 : UniformGrid(0.0, 0.5, 11)) check(Phi2FromBeta1(b1));
}

TEST(MakeCatalogEntryTest, ByName) {
  EXPECT_EQ(MakeCatalogEntry("gammaGHZ", {{"gamma", 0.3}}).name, "gammaGHZ");
  EXPECT_EQ(MakeCatalogEntry("psi78", {{"delta", 1.0}}).name, "psi78");
  const CatalogEntry p1 = MakeCatalogEntry("phi1", {{"alpha3", 0.5}});
  EXPECT_NEAR(p1.params.at("split"), 0.5, 0.0);
  EXPECT_NO_THROW(MakeCatalogEntry(
      "phi1", {{"alpha1", 0.6}, {"alpha2", 0.8}, {"alpha3", 0.0}}));
  EXPECT_NO_THROW(MakeCatalogEntry("phi2", {{"beta1", 0.2}}));
  EXPECT_THROW(MakeCatalogEntry("psi6", {}), ParseError);
  EXPECT_THROW(MakeCatalogEntry("psi6", {{"gamma", 1.0}}), ParseError);
  EXPECT_THROW(MakeCatalogEntry("w", {}), ParseError);
  EXPECT_EQ(CatalogFamilies().size(), 5u);
}

}  // namespace
}  // namespace mcqw
