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

#include "mcqw/coin_state.h"

#include <cmath>
#include <string>
#include <utility>

#include "mcqw/error.h"

namespace mcqw {
namespace {

int Log2Exact(std::size_t n) {
  int bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  return (std::size_t{1} << bits) == n ? bits : -1;
}

}  // namespace

CoinState::CoinState(std::vector<Complex> amplitudes, double tolerance)
    : amplitudes_(std::move(amplitudes)) {
  const int bits = Log2Exact(amplitudes_.size());
  if (bits < 1) {
    throw DimensionError("coin state length " +
                         std::to_string(amplitudes_.size()) +
                         " is not 2^M with M >= 1");
  }
  num_coins_ = bits;
  const double norm2 = SquaredNorm();
  if (!std::isfinite(norm2) || std::abs(std::sqrt(norm2) - 1.0) > tolerance) {
    throw NormalizationError("coin state norm " +
                             std::to_string(std::sqrt(norm2)) +
                             " deviates from 1");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& amp : amplitudes_) amp *= scale;
}

CoinState CoinState::Basis(int num_coins, std::size_t index) {
  if (num_coins < 1 || num_coins > 20) {
    throw DimensionError("number of coins must be in [1, 20]");
  }
  const std::size_t dim = std::size_t{1} << num_coins;
  if (index >= dim) throw DimensionError("basis index out of range");
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return CoinState(std::move(amps));
}

double CoinState::SquaredNorm() const {
  double sum = 0.0;
  for (const auto& amp : amplitudes_) sum += std::norm(amp);
  return sum;
}

void CheckQubit(int qubit, int num_coins) {
  if (qubit < 1 || qubit > num_coins) {
    throw DimensionError("qubit " + std::to_string(qubit) +
                         " out of range [1, " + std::to_string(num_coins) +
                         "]");
  }
}

}  // namespace mcqw
