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

#ifndef MCQW_LAB_H_
#define MCQW_LAB_H_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcqw/catalog.h"
#include "mcqw/fit.h"
#include "mcqw/spectral.h"
#include "mcqw/walk.h"

namespace mcqw {

// Residual tolerance for both laws, relative to the law's scale
// (c1_tilde^2 for the mean, c2_tilde for the variance).
inline constexpr double kLawTolerance = 1e-6;

struct MeanLawReport {
  std::string state;
  int active_qubit = 0;
  int t = 0;
  double mean_direct = 0.0;
  double mean_integral = 0.0;
  double ic_squared = 0.0;
  double c1_tilde = 0.0;
  double predicted_mean_squared = 0.0;  // c1~^2 (1 - IC^2)
  double residual = 0.0;                // |<x>^2 - predicted|
  double coherence = 0.0;               // |rho_01| of the active qubit
  bool holds = false;
  // The law failing on a mixed-entanglement state with vanishing mean is the
  // expected outcome, not an artifact error.
  bool mixed_exception = false;
};

MeanLawReport MeanLawCheck(const CatalogEntry& entry, int active_qubit, int t);

struct VarianceLawReport {
  std::string state;
  int active_qubit = 0;
  int t = 0;
  double variance_direct = 0.0;
  double second_moment_direct = 0.0;
  double ic_squared = 0.0;
  double c1_tilde = 0.0;
  double c2_tilde = 0.0;
  double predicted_variance = 0.0;  // c2~ - c1~^2 + c1~^2 IC^2
  double residual = 0.0;
  bool holds = false;
  bool mixed_exception = false;
};

VarianceLawReport VarianceLawCheck(const CatalogEntry& entry,
                                   int active_qubit, int t);

// One-parameter family of catalog states.
struct SweepFamily {
  std::string family;
  std::string param_name;
  std::function<CatalogEntry(double)> make;
  double lo = 0.0;
  double hi = 1.0;
  int default_points = 101;
};

// Default sweep for a family: gammaGHZ over gamma in [0, 1], psi6 and psi78
// over delta in [-10, 10], phi1 over alpha3 in [0, 1/sqrt2] at the given
// split, phi2 over beta1 in [0, 1/2]. `fixed` holds the non-swept params
// (only "split" for phi1).
SweepFamily MakeSweepFamily(const std::string& family,
                            const std::map<std::string, double>& fixed = {});

std::vector<double> UniformGrid(double lo, double hi, int points);

struct SweepPoint {
  double param = 0.0;
  std::vector<double> ic_squared;  // per qubit
  double mean_direct = 0.0;
  double mean_integral = 0.0;
  double second_moment = 0.0;
  double variance = 0.0;
};

struct SweepReport {
  std::string family;
  std::string param_name;
  std::vector<double> grid;
  int active_qubit = 0;
  int t = 0;
  std::vector<SweepPoint> points;
  std::optional<FitResult> fit;  // <x>^2 = A0 (1 - IC^2)
  double c1_tilde_squared = 0.0;
};

// Simulates every grid point without fitting.
SweepReport RunSweep(const SweepFamily& family, const std::vector<double>& grid,
                     int active_qubit, int t);

// RunSweep plus the A0 fit. Throws DegenerateFitError if IC^2 of the active
// qubit is constant over the grid (phi2).
SweepReport SweepAndFitA0(const SweepFamily& family,
                          const std::vector<double>& grid, int active_qubit,
                          int t);

// Q(t) at chosen lattice sites. A lattice_size of 0 selects the default
// 2 t_max + 21, which puts the start site at t_max + 10.
struct QTimeSeries {
  int lattice_size = 0;
  int start_site = 0;
  std::vector<int> sites;
  // rows[t][j] is Q at sites[j] after t steps, t = 0..t_max.
  std::vector<std::vector<std::optional<double>>> rows;
};

QTimeSeries QTimeSeriesFor(const CatalogEntry& entry, int active_qubit,
                           const std::vector<int>& sites, int t_max,
                           int lattice_size = 0);

struct SymmetryReport {
  double p_asymmetry = 0.0;  // max_d |P(x0 + d) - P(x0 - d)|
  double q_asymmetry = 0.0;  // same for Q, over sites where both defined
};

SymmetryReport DistributionSymmetry(const CatalogEntry& entry,
                                    int active_qubit, int t);

// Symmetry of an already evolved state.
SymmetryReport DistributionSymmetry(const WalkState& state);

}  // namespace mcqw

#endif  // MCQW_LAB_H_
