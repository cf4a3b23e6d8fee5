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

#ifndef MCQW_FIT_H_
#define MCQW_FIT_H_

#include <span>
#include <string_view>
#include <vector>

namespace mcqw {

enum class FitModel {
  kLinear,        // y = a0 x + a1
  kQuadratic,     // y = b0 x^2
  kProportional,  // y = A0 x, used with x = 1 - IC^2
};

std::string_view ToString(FitModel model);

struct FitPoint {
  double x = 0.0;
  double y = 0.0;
};

struct FitResult {
  FitModel model = FitModel::kLinear;
  std::vector<double> coefficients;  // kLinear: {a0, a1}; otherwise {coef}
  double residual_rms = 0.0;
};

// Ordinary least squares via the normal equations of each model. Throws
// DegenerateFitError when the design is singular (all x equal for kLinear,
// all basis values zero for the one-coefficient models) or there are too
// few points.
FitResult FitLeastSquares(std::span<const FitPoint> points, FitModel model);

}  // namespace mcqw

#endif  // MCQW_FIT_H_
