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

#include <cmath>
#include <string>

#include "mcqw/error.h"

namespace mcqw {
namespace {

double Basis(FitModel model, double x) {
  return model == FitModel::kQuadratic ? x * x : x;
}

double Predict(const FitResult& fit, double x) {
  if (fit.model == FitModel::kLinear) {
    return fit.coefficients[0] * x + fit.coefficients[1];
  }
  return fit.coefficients[0] * Basis(fit.model, x);
}

}  // namespace

std::string_view ToString(FitModel model) {
  switch (model) {
    case FitModel::kLinear:
      return "linear";
    case FitModel::kQuadratic:
      return "quadratic";
    case FitModel::kProportional:
      return "proportional";
  }
  return "unknown";
}

FitResult FitLeastSquares(std::span<const FitPoint> points, FitModel model) {
  FitResult fit;
  fit.model = model;
  const double n = static_cast<double>(points.size());

  if (model == FitModel::kLinear) {
    if (points.size() < 2) {
      throw DegenerateFitError("linear fit needs at least 2 points");
    }
    // Centered sums keep the 2x2 normal equations well conditioned.
    double mean_x = 0.0, mean_y = 0.0;
    for (const auto& p : points) {
      mean_x += p.x;
      mean_y += p.y;
    }
    mean_x /= n;
    mean_y /= n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& p : points) {
      sxx += (p.x - mean_x) * (p.x - mean_x);
      sxy += (p.x - mean_x) * (p.y - mean_y);
    }
    if (sxx == 0.0) throw DegenerateFitError("all x values are identical");
    const double slope = sxy / sxx;
    fit.coefficients = {slope, mean_y - slope * mean_x};
  } else {
    if (points.empty()) throw DegenerateFitError("fit needs at least 1 point");
    double sff = 0.0, sfy = 0.0;
    for (const auto& p : points) {
      const double f = Basis(model, p.x);
      sff += f * f;
      sfy += f * p.y;
    }
    if (sff == 0.0) {
      throw DegenerateFitError(std::string(ToString(model)) +
                               " fit: basis vanishes at every point");
    }
    fit.coefficients = {sfy / sff};
  }

  double ss = 0.0;
  for (const auto& p : points) {
    const double r = p.y - Predict(fit, p.x);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / n);
  return fit;
}

}  // namespace mcqw
