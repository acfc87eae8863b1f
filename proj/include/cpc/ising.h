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

#ifndef CPC_ISING_H_
#define CPC_ISING_H_

#include <cstdint>
#include <string>
#include <vector>

#include "cpc/code.h"

namespace cpc {

/// Independent error probabilities for each effective bit and each check.
struct Priors {
  std::vector<double> bit;
  std::vector<double> check;

  static Priors uniform(const ClassicalCode &code, double p);
};

/// E(s) = sum_h L_h s_h + sum_checks (-1)^m L_c prod_{h in check} s_h with
/// L = log(p / (1 - p)). Spin +1 means no error on that bit.
struct IsingProblem {
  struct Term {
    std::vector<size_t> spins;
    double coefficient = 0;
  };
  size_t spin_count = 0;
  std::vector<double> fields;
  std::vector<Term> checks;

  double energy(const std::vector<int> &spins) const;
  /// "field <spin> <coeff>" and "check <spins...> <coeff>" lines.
  std::string str() const;
};

/// `measurements[i]` is the outcome of check i (1 = parity flagged).
IsingProblem ising_problem(const ClassicalCode &code, const Priors &priors, const std::vector<uint8_t> &measurements);

struct IsingGroundState {
  std::vector<int> spins;
  double energy = 0;
};

/// Exhaustive minimization; ties go to the lexicographically smallest set of
/// flipped spins. At most 24 spins.
IsingGroundState ising_ground_state(const IsingProblem &problem);

struct MlDecodeResult {
  std::vector<size_t> bit_errors;
  std::vector<size_t> check_errors;
  double log_likelihood = 0;
};

/// Solves the Ising problem, then marks every check whose parity disagrees with
/// the inferred bit errors as errored.
MlDecodeResult ising_decode(const ClassicalCode &code, const std::vector<uint8_t> &measurements, const Priors &priors);

/// Joint enumeration over bit and check errors consistent with the
/// measurements. At most 24 bits plus checks.
MlDecodeResult ml_decode_exhaustive(const ClassicalCode &code, const std::vector<uint8_t> &measurements,
                                    const Priors &priors);

}  // namespace cpc

#endif  // CPC_ISING_H_
