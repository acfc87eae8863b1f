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


#ifndef CPC_SEARCH_H_
#define CPC_SEARCH_H_

#include <cstdint>
#include <random>
#include <vector>

#include "cpc/code.h"

namespace cpc {

/// Uniformly random matrices. With `mirror_bp` (requires n_b == n_p), mp is a
/// copy of mb.
CpcCode random_code(size_t k, size_t n_b, size_t n_p, std::mt19937_64 &rng, bool mirror_bp = false);

enum class SearchPredicate { kSingleErrorCorrecting, kCnotCompatible };

struct SearchConfig {
  size_t k = 3;
  size_t n_b = 4;
  size_t n_p = 4;
  SearchPredicate predicate = SearchPredicate::kSingleErrorCorrecting;
  /// 0-based data qubits for kCnotCompatible.
  size_t control = 0;
  size_t target = 1;
  bool mirror_bp = false;
  uint64_t budget = 0;
  uint64_t seed = 1;
  /// Maximum number of codes kept; successes beyond it are still counted.
  size_t cap = 100;
  size_t threads = 1;
};

struct FoundCode {
  uint64_t trial = 0;
  CpcCode code;
};

struct SearchResult {
  std::vector<FoundCode> codes;  // ascending trial index
  uint64_t trials = 0;
  uint64_t successes = 0;
  double success_rate = 0;
};

/// Trial t draws its code from stream_rng(seed, t), so the result does not
/// depend on the thread count.
SearchResult search(const SearchConfig &config);

/// Re-evaluates the configured predicate on one code.
bool search_predicate_holds(const SearchConfig &config, const CpcCode &code);

}  // namespace cpc

#endif  // CPC_SEARCH_H_
