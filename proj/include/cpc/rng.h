// Copyright 2026 The cpc-codes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CPC_RNG_H_
#define CPC_RNG_H_

#include <cstdint>
#include <random>

namespace cpc {

/// Seed for the independent stream (index, lane) under a master seed, so that
/// per-trial randomness does not depend on scheduling.
uint64_t stream_seed(uint64_t seed, uint64_t index, uint64_t lane = 0);

inline std::mt19937_64 stream_rng(uint64_t seed, uint64_t index, uint64_t lane = 0) {
  return std::mt19937_64(stream_seed(seed, index, lane));
}

}  // namespace cpc

#endif  // CPC_RNG_H_
