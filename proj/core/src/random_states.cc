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

#include "mcqw/random_states.h"

#include <cmath>
#include <vector>

#include "mcqw/error.h"

namespace mcqw {

CoinState RandomCoinState(int num_coins, std::mt19937_64& rng) {
  if (num_coins < 1 || num_coins > 20) {
    throw DimensionError("number of coins must be in [1, 20]");
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> amps(std::size_t{1} << num_coins);
  double norm2 = 0.0;
  for (auto& amp : amps) {
    amp = Complex(gauss(rng), gauss(rng));
    norm2 += std::norm(amp);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& amp : amps) amp *= scale;
  return CoinState(std::move(amps));
}

CoinState RandomCoinState(int num_coins, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return RandomCoinState(num_coins, rng);
}

}  // namespace mcqw
