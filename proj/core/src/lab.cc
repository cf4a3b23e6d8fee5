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

#include "mcqw/lab.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "mcqw/entanglement.h"
#include "mcqw/error.h"

namespace mcqw {
namespace {

// Residuals at or below this are treated as exact zeros when the law's scale
// itself vanishes (t = 0 or c1_tilde(t) = 0).
constexpr double kAbsoluteFloor = 1e-12;
constexpr double kZeroMean = 1e-9;

WalkState EvolveOnDefaultLattice(const CoinState& coin, int active_qubit,
                                 int t) {
  const int n = DefaultLatticeSize(t);
  const WalkState start(coin, n, DefaultStartSite(n));
  return Evolve(start, StepConfig{active_qubit}, t);
}

}  // namespace

MeanLawReport MeanLawCheck(const CatalogEntry& entry, int active_qubit,
                           int t) {
  CheckQubit(active_qubit, entry.coin.num_coins());
  const WalkState state = EvolveOnDefaultLattice(entry.coin, active_qubit, t);

  MeanLawReport r;
  r.state = entry.name;
  r.active_qubit = active_qubit;
  r.t = t;
  r.mean_direct = DirectMoment(state, 1);
  r.mean_integral = MomentViaIntegral(entry.coin, active_qubit, 1, t);
  r.ic_squared = IConcurrenceSquared(entry.coin, active_qubit);
  r.c1_tilde = C1Tilde(t);
  const double scale = r.c1_tilde * r.c1_tilde;
  r.predicted_mean_squared = scale * (1.0 - r.ic_squared);
  r.residual = std::abs(r.mean_direct * r.mean_direct - r.predicted_mean_squared);
  r.coherence = std::abs(ReduceToQubit(entry.coin, active_qubit)(0, 1));
  r.holds = r.residual <= std::max(kLawTolerance * scale, kAbsoluteFloor);
  r.mixed_exception = !r.holds &&
                      entry.entanglement_class == EntanglementClass::kMixed &&
                      std::abs(r.mean_direct) < kZeroMean;
  return r;
}

VarianceLawReport VarianceLawCheck(const CatalogEntry& entry,
                                   int active_qubit, int t) {
  CheckQubit(active_qubit, entry.coin.num_coins());
  const WalkState state = EvolveOnDefaultLattice(entry.coin, active_qubit, t);

  VarianceLawReport r;
  r.state = entry.name;
  r.active_qubit = active_qubit;
  r.t = t;
  const double mean = DirectMoment(state, 1);
  r.second_moment_direct = DirectMoment(state, 2);
  r.variance_direct = r.second_moment_direct - mean * mean;
  r.ic_squared = IConcurrenceSquared(entry.coin, active_qubit);
  r.c1_tilde = C1Tilde(t);
  r.c2_tilde = C2Tilde(t);
  const double c1sq = r.c1_tilde * r.c1_tilde;
  r.predicted_variance = r.c2_tilde - c1sq + c1sq * r.ic_squared;
  r.residual = std::abs(r.variance_direct - r.predicted_variance);
  r.holds = r.residual <= std::max(kLawTolerance * r.c2_tilde, kAbsoluteFloor);
  r.mixed_exception = !r.holds &&
                      entry.entanglement_class == EntanglementClass::kMixed &&
                      std::abs(mean) < kZeroMean;
  return r;
}

SweepFamily MakeSweepFamily(const std::string& family,
                            const std::map<std::string, double>& fixed) {
  for (const auto& [key, value] : fixed) {
    if (!(family == "phi1" && key == "split")) {
      throw ParseError("sweep of " + family + " takes no fixed parameter '" +
                       key + "'");
    }
  }
  if (family == "gammaGHZ") {
    return {family, "gamma", [](double g) { return GammaGhz(g); }, 0.0, 1.0,
            101};
  }
  if (family == "psi6") {
    return {family, "delta", [](double d) { return Psi6(d); }, -10.0, 10.0,
            201};
  }
  if (family == "psi78") {
    return {family, "delta", [](double d) { return Psi78(d); }, -10.0, 10.0,
            201};
  }
  if (family == "phi1") {
    const auto it = fixed.find("split");
    const double split = it == fixed.end() ? 0.5 : it->second;
    return {family, "alpha3",
            [split](double a3) { return Phi1Split(a3, split); }, 0.0,
            1.0 / std::numbers::sqrt2, 101};
  }
  if (family == "phi2") {
    return {family, "beta1", [](double b1) { return Phi2FromBeta1(b1); }, 0.0,
            0.5, 101};
  }
  throw ParseError("unknown sweep family '" + family + "'");
}

std::vector<double> UniformGrid(double lo, double hi, int points) {
  if (points < 1) throw Error("grid needs at least one point");
  if (points == 1) return {lo};
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] =
        i == points - 1 ? hi : lo + (hi - lo) * i / (points - 1);
  }
  return grid;
}

SweepReport RunSweep(const SweepFamily& family, const std::vector<double>& grid,
                     int active_qubit, int t) {
  SweepReport report;
  report.family = family.family;
  report.param_name = family.param_name;
  report.grid = grid;
  report.active_qubit = active_qubit;
  report.t = t;
  const double c1 = C1Tilde(t);
  report.c1_tilde_squared = c1 * c1;

  report.points.reserve(grid.size());
  for (double param : grid) {
    const CatalogEntry entry = family.make(param);
    const int m = entry.coin.num_coins();
    CheckQubit(active_qubit, m);
    SweepPoint point;
    point.param = param;
    for (int q = 1; q <= m; ++q) {
      point.ic_squared.push_back(IConcurrenceSquared(entry.coin, q));
    }
    const WalkState state =
        EvolveOnDefaultLattice(entry.coin, active_qubit, t);
    point.mean_direct = DirectMoment(state, 1);
    point.mean_integral = MomentViaIntegral(entry.coin, active_qubit, 1, t);
    point.second_moment = DirectMoment(state, 2);
    point.variance = point.second_moment - point.mean_direct * point.mean_direct;
    report.points.push_back(std::move(point));
  }
  return report;
}

SweepReport SweepAndFitA0(const SweepFamily& family,
                          const std::vector<double>& grid, int active_qubit,
                          int t) {
  SweepReport report = RunSweep(family, grid, active_qubit, t);
  const auto idx = static_cast<std::size_t>(active_qubit - 1);
  double lo = 1.0, hi = 0.0;
  std::vector<FitPoint> points;
  for (const auto& p : report.points) {
    lo = std::min(lo, p.ic_squared[idx]);
    hi = std::max(hi, p.ic_squared[idx]);
    points.push_back({1.0 - p.ic_squared[idx], p.mean_direct * p.mean_direct});
  }
  if (hi - lo < 1e-9) {
    throw DegenerateFitError("IC^2 of qubit " + std::to_string(active_qubit) +
                             " is constant over the " + family.family +
                             " sweep; A0 is not identifiable");
  }
  report.fit = FitLeastSquares(points, FitModel::kProportional);
  return report;
}

QTimeSeries QTimeSeriesFor(const CatalogEntry& entry, int active_qubit,
                           const std::vector<int>& sites, int t_max,
                           int lattice_size) {
  if (entry.coin.num_coins() < 2) {
    throw DimensionError("global entanglement needs M >= 2 qubits");
  }
  if (t_max < 0) throw Error("t_max must be non-negative");
  QTimeSeries series;
  series.lattice_size =
      lattice_size > 0 ? lattice_size : DefaultLatticeSize(t_max);
  if (series.lattice_size < MinLatticeSize(t_max)) {
    throw WraparoundError("lattice of " + std::to_string(series.lattice_size) +
                          " sites too small for " + std::to_string(t_max) +
                          " steps");
  }
  series.start_site = DefaultStartSite(series.lattice_size);
  series.sites = sites;
  for (int site : sites) {
    if (site < 0 || site >= series.lattice_size) {
      throw DimensionError("site " + std::to_string(site) +
                           " outside lattice of size " +
                           std::to_string(series.lattice_size));
    }
  }
  const StepConfig config{active_qubit};
  WalkState state(entry.coin, series.lattice_size, series.start_site);
  for (int t = 0; t <= t_max; ++t) {
    if (t > 0) state = ApplyStep(state, config);
    std::vector<std::optional<double>> row;
    for (int site : sites) {
      const SiteCoin sc = CoinStateAt(state, site);
      row.push_back(sc.coin ? std::optional<double>(GlobalQ(*sc.coin))
                            : std::nullopt);
    }
    series.rows.push_back(std::move(row));
  }
  return series;
}

SymmetryReport DistributionSymmetry(const WalkState& state) {
  const std::vector<double> p = PositionDistribution(state);
  const std::vector<ProfileEntry> profile = QLatticeProfile(state);
  SymmetryReport report;
  for (int d = 1; 2 * d < state.lattice_size(); ++d) {
    const auto right = static_cast<std::size_t>(state.SiteAt(d));
    const auto left = static_cast<std::size_t>(state.SiteAt(-d));
    report.p_asymmetry = std::max(report.p_asymmetry, std::abs(p[right] - p[left]));
    if (profile[right].q && profile[left].q) {
      report.q_asymmetry = std::max(
          report.q_asymmetry, std::abs(*profile[right].q - *profile[left].q));
    }
  }
  return report;
}

SymmetryReport DistributionSymmetry(const CatalogEntry& entry,
                                    int active_qubit, int t) {
  return DistributionSymmetry(
      EvolveOnDefaultLattice(entry.coin, active_qubit, t));
}

}  // namespace mcqw
