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

#include "mcqw/fit.h"

#include <vector>

#include "gtest/gtest.h"
#include "mcqw/error.h"

namespace mcqw {
namespace {

TEST(FitTest, ExactLine) {
  std::vector<FitPoint> pts;
  for (int x = -3; x <= 5; ++x) pts.push_back({double(x), 2.0 * x + 1.0});
  const FitResult f = FitLeastSquares(pts, FitModel::kLinear);
  ASSERT_EQ(f.coefficients.size(), 2u);
  EXPECT_NEAR(f.coefficients[0], 2.0, 1e-14);
  EXPECT_NEAR(f.coefficients[1], 1.0, 1e-14);
  EXPECT_NEAR(f.residual_rms, 0.0, 1e-14);
}

TEST(FitTest, ExactParabolaThroughOrigin) {
  std::vector<FitPoint> pts;
  for (int x = 1; x <= 10; ++x) pts.push_back({double(x), 3.0 * x * x});
  const FitResult f = FitLeastSquares(pts, FitModel::kQuadratic);
  EXPECT_NEAR(f.coefficients[0], 3.0, 1e-14);
  EXPECT_NEAR(f.residual_rms, 0.0, 1e-12);
}

TEST(FitTest, ProportionalWithNoise) {
  // y = 2x +- 1 with alternating sign.
  const std::vector<FitPoint> pts = {{1, 3}, {2, 3}, {3, 7}, {4, 7}, {5, 11}, {6, 11}};
  const FitResult f = FitLeastSquares(pts, FitModel::kProportional);
  // sum xy / sum x^2 = 179 / 91.
  EXPECT_NEAR(f.coefficients[0], 179.0 / 91.0, 1e-14);
  EXPECT_GT(f.residual_rms, 0.0);
}

TEST(FitTest, LeastSquaresIsStationary) {
  const std::vector<FitPoint> pts = {{0, 1}, {1, 0}, {2, 4}, {3, 2}, {4, 7}};
  const FitResult f = FitLeastSquares(pts, FitModel::kLinear);
  double g0 = 0, g1 = 0;
  for (const auto& p : pts) {
    const double r = p.y - (f.coefficients[0] * p.x + f.coefficients[1]);
    g0 += r * p.x;
    g1 += r;
  }
  EXPECT_NEAR(g0, 0.0, 1e-12);
  EXPECT_NEAR(g1, 0.0, 1e-12);
}

TEST(FitTest, DegenerateDesigns) {
  const std::vector<FitPoint> same_x = {{1, 1}, {1, 2}, {1, 3}};
  EXPECT_THROW(FitLeastSquares(same_x, FitModel::kLinear), DegenerateFitError);
  const std::vector<FitPoint> one = {{1, 1}};
  EXPECT_THROW(FitLeastSquares(one, FitModel::kLinear), DegenerateFitError);
  EXPECT_NO_THROW(FitLeastSquares(one, FitModel::kQuadratic));
  const std::vector<FitPoint> zeros = {{0, 1}, {0, 2}};
  EXPECT_THROW(FitLeastSquares(zeros, FitModel::kProportional),
               DegenerateFitError);
  EXPECT_THROW(FitLeastSquares(std::vector<FitPoint>{}, FitModel::kQuadratic),
               DegenerateFitError);
}

}  // namespace
}  // namespace mcqw
