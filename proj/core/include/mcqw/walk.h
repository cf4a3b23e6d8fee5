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

#ifndef MCQW_WALK_H_
#define MCQW_WALK_H_

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "mcqw/coin_state.h"

namespace mcqw {

// Unbiased toss (1, i; i, 1)/sqrt(2).
Eigen::Matrix2cd UnbiasedToss();

// Which coin qubit the toss and the conditional shift act on. The same
// configuration is used for every step of a walk.
struct StepConfig {
  int active_qubit = 1;
  Eigen::Matrix2cd toss = UnbiasedToss();

  // Throws DimensionError if the toss is not unitary within 1e-12 or the
  // active qubit does not exist in an M-coin register.
  void Validate(int num_coins) const;
};

// Smallest cyclic lattice on which `steps` steps never wrap around.
constexpr int MinLatticeSize(int steps) { return 2 * steps + 2; }

// Lattice size used when none is given: 2t + 21, which puts the start site
// at t + 10 and leaves a margin of ten empty sites on either side.
constexpr int DefaultLatticeSize(int steps) { return 2 * steps + 21; }
constexpr int DefaultStartSite(int lattice_size) {
  return (lattice_size - 1) / 2;
}

// Dense amplitude tensor psi(c, x) of the walker (x) coin system on a cyclic
// lattice of n sites. Row c is the coin basis index, column x the site.
//
// A state flagged for moment analysis refuses to take a step that would let
// the support [x0 - t, x0 + t] wrap around the ring (n < 2t + 2).
class WalkState {
 public:
  WalkState(const CoinState& coin, int lattice_size, int start_site,
            bool moment_analysis = true);

  int num_coins() const { return num_coins_; }
  int coin_dim() const { return static_cast<int>(amplitudes_.rows()); }
  int lattice_size() const { return static_cast<int>(amplitudes_.cols()); }
  int start_site() const { return start_site_; }
  int steps_taken() const { return steps_taken_; }
  bool moment_analysis() const { return moment_analysis_; }

  const Eigen::MatrixXcd& amplitudes() const { return amplitudes_; }
  Complex amplitude(int coin_index, int site) const {
    return amplitudes_(coin_index, site);
  }

  double SquaredNorm() const { return amplitudes_.squaredNorm(); }

  // Signed displacement of `site` from the start, using the nearest image on
  // the ring: result lies in (-n/2, n/2].
  int Displacement(int site) const;

  // Lattice index at signed displacement `d` from the start (mod n).
  int SiteAt(int displacement) const;

  // True if `steps` more steps keep the support unambiguous.
  bool CanTakeSteps(int steps) const {
    return lattice_size() >= MinLatticeSize(steps_taken_ + steps);
  }

 private:
  friend WalkState ApplyStep(const WalkState& state, const StepConfig& config);

  Eigen::MatrixXcd amplitudes_;
  int num_coins_ = 0;
  int start_site_ = 0;
  int steps_taken_ = 0;
  bool moment_analysis_ = true;
};

// One application of E: toss on the active qubit, then shift x -> x+1 for
// active bit 0 and x -> x-1 for active bit 1.
WalkState ApplyStep(const WalkState& state, const StepConfig& config);

// `steps`-fold ApplyStep. Throws WraparoundError up front if the state is
// flagged for moment analysis and the lattice is too small.
WalkState Evolve(const WalkState& state, const StepConfig& config, int steps);

// P(x) = sum_c |psi(c, x)|^2, indexed by lattice site.
std::vector<double> PositionDistribution(const WalkState& state);

// sum_x P(x) (x - x0)^m for m in {1, 2}, in signed displacement coordinates.
// Throws WraparoundError if the walk has outgrown the lattice.
double DirectMoment(const WalkState& state, int m);

inline constexpr double kDefaultWeightThreshold = 1e-14;

// Coin register conditioned on the walker sitting at one site.
struct SiteCoin {
  double weight = 0.0;            // sum_c |psi(c, x)|^2
  std::optional<CoinState> coin;  // empty when weight <= threshold
};

// Column x of the tensor, renormalized. `coin` is empty for sites the walker
// has not reached (weight at or below `threshold`).
SiteCoin CoinStateAt(const WalkState& state, int site,
                     double threshold = kDefaultWeightThreshold);

}  // namespace mcqw

#endif  // MCQW_WALK_H_
