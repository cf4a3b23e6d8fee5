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

#include "mcqw/walk.h"

#include <cmath>
#include <string>

#include "mcqw/error.h"

namespace mcqw {

Eigen::Matrix2cd UnbiasedToss() {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd u;
  u << s, i * s,
       i * s, s;
  return u;
}

void StepConfig::Validate(int num_coins) const {
  CheckQubit(active_qubit, num_coins);
  const Eigen::Matrix2cd product = toss * toss.adjoint();
  if ((product - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-12) {
    throw DimensionError("toss operator is not unitary");
  }
}

WalkState::WalkState(const CoinState& coin, int lattice_size, int start_site,
                     bool moment_analysis)
    : num_coins_(coin.num_coins()),
      start_site_(start_site),
      moment_analysis_(moment_analysis) {
  if (lattice_size < 1) throw DimensionError("lattice size must be >= 1");
  if (start_site < 0 || start_site >= lattice_size) {
    throw DimensionError("start site " + std::to_string(start_site) +
                         " outside lattice of size " +
                         std::to_string(lattice_size));
  }
  const auto dim = static_cast<Eigen::Index>(coin.dim());
  amplitudes_ = Eigen::MatrixXcd::Zero(dim, lattice_size);
  for (Eigen::Index c = 0; c < dim; ++c) {
    amplitudes_(c, start_site) = coin[static_cast<std::size_t>(c)];
  }
}

int WalkState::Displacement(int site) const {
  const int n = lattice_size();
  int d = ((site - start_site_) % n + n) % n;
  if (2 * d > n) d -= n;
  return d;
}

int WalkState::SiteAt(int displacement) const {
  const int n = lattice_size();
  return ((start_site_ + displacement) % n + n) % n;
}

WalkState ApplyStep(const WalkState& state, const StepConfig& config) {
  config.Validate(state.num_coins());
  if (state.moment_analysis() && !state.CanTakeSteps(1)) {
    throw WraparoundError("lattice of " +
                          std::to_string(state.lattice_size()) +
                          " sites too small for step " +
                          std::to_string(state.steps_taken() + 1));
  }
  const Eigen::Index dim = state.coin_dim();
  const Eigen::Index n = state.lattice_size();
  const auto mask = static_cast<Eigen::Index>(
      QubitMask(config.active_qubit, state.num_coins()));
  const Eigen::Matrix2cd& u = config.toss;

  // Toss on the active qubit, then conditional shift of each coin row.
  WalkState next = state;
  for (Eigen::Index c0 = 0; c0 < dim; ++c0) {
    if (c0 & mask) continue;
    const Eigen::Index c1 = c0 | mask;
    for (Eigen::Index x = 0; x < n; ++x) {
      const Complex a0 = state.amplitudes_(c0, x);
      const Complex a1 = state.amplitudes_(c1, x);
      next.amplitudes_(c0, (x + 1) % n) = u(0, 0) * a0 + u(0, 1) * a1;
      next.amplitudes_(c1, (x - 1 + n) % n) = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }
  ++next.steps_taken_;
  return next;
}

WalkState Evolve(const WalkState& state, const StepConfig& config, int steps) {
  if (steps < 0) throw Error("number of steps must be non-negative");
  config.Validate(state.num_coins());
  if (state.moment_analysis() && !state.CanTakeSteps(steps)) {
    throw WraparoundError(
        "lattice of " + std::to_string(state.lattice_size()) +
        " sites needs at least " +
        std::to_string(MinLatticeSize(state.steps_taken() + steps)) +
        " for " + std::to_string(state.steps_taken() + steps) + " steps");
  }
  WalkState current = state;
  for (int s = 0; s < steps; ++s) current = ApplyStep(current, config);
  return current;
}

std::vector<double> PositionDistribution(const WalkState& state) {
  const Eigen::VectorXd column_weights =
      state.amplitudes().cwiseAbs2().colwise().sum().transpose();
  return {column_weights.data(), column_weights.data() + column_weights.size()};
}

double DirectMoment(const WalkState& state, int m) {
  if (m != 1 && m != 2) throw Error("moment order must be 1 or 2");
  if (state.lattice_size() < MinLatticeSize(state.steps_taken())) {
    throw WraparoundError("walk support has wrapped around the lattice");
  }
  const std::vector<double> p = PositionDistribution(state);
  double sum = 0.0;
  for (int x = 0; x < state.lattice_size(); ++x) {
    const double d = state.Displacement(x);
    sum += p[static_cast<std::size_t>(x)] * (m == 1 ? d : d * d);
  }
  return sum;
}

SiteCoin CoinStateAt(const WalkState& state, int site, double threshold) {
  if (site < 0 || site >= state.lattice_size()) {
    throw DimensionError("site " + std::to_string(site) + " outside lattice");
  }
  SiteCoin result;
  const auto column = state.amplitudes().col(site);
  result.weight = column.squaredNorm();
  if (result.weight <= threshold) return result;
  const double scale = 1.0 / std::sqrt(result.weight);
  std::vector<Complex> amps(static_cast<std::size_t>(column.size()));
  for (Eigen::Index c = 0; c < column.size(); ++c) {
    amps[static_cast<std::size_t>(c)] = column(c) * scale;
  }
  result.coin.emplace(std::move(amps));
  return result;
}

}  // namespace mcqw
