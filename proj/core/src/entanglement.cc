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

#include "mcqw/entanglement.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "mcqw/error.h"

namespace mcqw {

DensityMatrix Reduce(const CoinState& coin, std::span<const int> keep) {
  const int m = coin.num_coins();
  if (keep.empty()) throw DimensionError("qubit subset must not be empty");
  std::vector<bool> kept(static_cast<std::size_t>(m) + 1, false);
  for (int q : keep) {
    CheckQubit(q, m);
    if (kept[static_cast<std::size_t>(q)]) {
      throw DimensionError("qubit " + std::to_string(q) +
                           " listed twice in subset");
    }
    kept[static_cast<std::size_t>(q)] = true;
  }
  std::vector<int> traced;
  for (int q = 1; q <= m; ++q) {
    if (!kept[static_cast<std::size_t>(q)]) traced.push_back(q);
  }

  // Reshape psi into a (kept x traced) matrix, then rho = Psi Psi^dagger.
  const Eigen::Index kept_dim = Eigen::Index{1} << keep.size();
  const Eigen::Index traced_dim = Eigen::Index{1} << traced.size();
  Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(kept_dim, traced_dim);
  for (std::size_t c = 0; c < coin.dim(); ++c) {
    Eigen::Index row = 0;
    for (int q : keep) row = (row << 1) | QubitBit(c, q, m);
    Eigen::Index col = 0;
    for (int q : traced) col = (col << 1) | QubitBit(c, q, m);
    psi(row, col) = coin[c];
  }
  DensityMatrix rho;
  rho.entries = psi * psi.adjoint();
  rho.subset.assign(keep.begin(), keep.end());
  return rho;
}

Eigen::Matrix2cd ReduceToQubit(const CoinState& coin, int qubit) {
  const int keep[] = {qubit};
  return Reduce(coin, keep).entries;
}

double Purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
  return rho.entries.cwiseAbs2().sum();
}

double IConcurrenceSquared(const CoinState& coin, int qubit) {
  const int keep[] = {qubit};
  return std::max(0.0, 2.0 * (1.0 - Purity(Reduce(coin, keep))));
}

double IConcurrence(const CoinState& coin, int qubit) {
  return std::sqrt(IConcurrenceSquared(coin, qubit));
}

double GlobalQ(const CoinState& coin) {
  const int m = coin.num_coins();
  if (m < 2) throw DimensionError("global entanglement needs M >= 2 qubits");
  double purity_sum = 0.0;
  for (int q = 1; q <= m; ++q) {
    const int keep[] = {q};
    purity_sum += Purity(Reduce(coin, keep));
  }
  return std::clamp(2.0 * (1.0 - purity_sum / m), 0.0, 1.0);
}

std::vector<ProfileEntry> QLatticeProfile(const WalkState& state,
                                          double weight_threshold) {
  if (state.num_coins() < 2) {
    throw DimensionError("global entanglement needs M >= 2 qubits");
  }
  std::vector<ProfileEntry> profile;
  profile.reserve(static_cast<std::size_t>(state.lattice_size()));
  for (int x = 0; x < state.lattice_size(); ++x) {
    const SiteCoin site = CoinStateAt(state, x, weight_threshold);
    ProfileEntry entry{x, site.weight, std::nullopt};
    if (site.coin) entry.q = GlobalQ(*site.coin);
    profile.push_back(entry);
  }
  return profile;
}

}  // namespace mcqw
