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

#ifndef MCQW_COIN_STATE_H_
#define MCQW_COIN_STATE_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace mcqw {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-9;

// Normalized state of an M-qubit coin register.
//
// Basis states are ordered |q1 q2 ... qM> with qubit 1 the most significant
// bit, so the amplitude of |0110> sits at index 0b0110 = 6. Qubits are
// addressed 1-based throughout the library.
class CoinState {
 public:
  // Validates that `amplitudes` has length 2^M for some M >= 1 and unit norm
  // within `tolerance`; the stored vector is renormalized exactly.
  explicit CoinState(std::vector<Complex> amplitudes,
                     double tolerance = kNormTolerance);

  // |bits> for a computational basis index.
  static CoinState Basis(int num_coins, std::size_t index);

  int num_coins() const { return num_coins_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t index) const { return amplitudes_[index]; }

  double SquaredNorm() const;

 private:
  std::vector<Complex> amplitudes_;
  int num_coins_ = 0;
};

// Value (0 or 1) of 1-based `qubit` in basis index `index` of an M-qubit
// register.
constexpr int QubitBit(std::size_t index, int qubit, int num_coins) {
  return static_cast<int>((index >> (num_coins - qubit)) & 1U);
}

// Bit mask selecting 1-based `qubit` in an M-qubit basis index.
constexpr std::size_t QubitMask(int qubit, int num_coins) {
  return std::size_t{1} << (num_coins - qubit);
}

// Throws DimensionError unless 1 <= qubit <= num_coins.
void CheckQubit(int qubit, int num_coins);

}  // namespace mcqw

#endif  // MCQW_COIN_STATE_H_
