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

#ifndef MCQW_ENTANGLEMENT_H_
#define MCQW_ENTANGLEMENT_H_

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mcqw/coin_state.h"
#include "mcqw/walk.h"

namespace mcqw {

// Reduced density operator of an ordered subset of coin qubits. The first
// qubit in `subset` is the most significant bit of the row/column index.
struct DensityMatrix {
  Eigen::MatrixXcd entries;
  std::vector<int> subset;

  int dim() const { return static_cast<int>(entries.rows()); }
  Complex operator()(int row, int col) const { return entries(row, col); }
};

// Partial trace of |coin><coin| over every qubit not in `keep`.
// Throws DimensionError for an empty subset, duplicates, or qubits outside
// [1, M].
DensityMatrix Reduce(const CoinState& coin, std::span<const int> keep);

// Single-qubit shortcut for Reduce(coin, {qubit}).
Eigen::Matrix2cd ReduceToQubit(const CoinState& coin, int qubit);

// Tr(rho^2).
double Purity(const DensityMatrix& rho);

// IC^2 = 2 (1 - Tr rho_i^2) for the single-qubit reduction, clamped at zero
// against rounding.
double IConcurrenceSquared(const CoinState& coin, int qubit);

// i-concurrence sqrt(2 (1 - Tr rho_i^2)) between qubit `qubit` and the rest.
double IConcurrence(const CoinState& coin, int qubit);

// Meyer-Wallach global entanglement Q = 2 (1 - (1/M) sum_i Tr rho_i^2).
// Throws DimensionError for M < 2.
double GlobalQ(const CoinState& coin);

struct ProfileEntry {
  int site = 0;
  double weight = 0.0;
  std::optional<double> q;  // empty where the walker has no support
};

// Q of the per-site renormalized coin state for every lattice site.
std::vector<ProfileEntry> QLatticeProfile(
    const WalkState& state, double weight_threshold = kDefaultWeightThreshold);

}  // namespace mcqw

#endif  // MCQW_ENTANGLEMENT_H_
