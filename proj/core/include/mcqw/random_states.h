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

#ifndef MCQW_RANDOM_STATES_H_
#define MCQW_RANDOM_STATES_H_

#include <cstdint>
#include <random>

#include "mcqw/coin_state.h"

namespace mcqw {

// Random coin state with i.i.d. complex Gaussian amplitudes, normalized
// (unitarily invariant distribution).
CoinState RandomCoinState(int num_coins, std::mt19937_64& rng);

// Convenience overload seeding a fresh generator.
CoinState RandomCoinState(int num_coins, std::uint64_t seed);

}  // namespace mcqw

#endif  // MCQW_RANDOM_STATES_H_
