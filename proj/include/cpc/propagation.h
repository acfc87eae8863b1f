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

#ifndef CPC_PROPAGATION_H_
#define CPC_PROPAGATION_H_

#include <vector>

#include "cpc/code.h"
#include "cpc/gf2.h"

namespace cpc {

/// n_b x n_p matrix; entry (b, p) is set iff bit check b sees a phase error on
/// phase check p: mc[b,p] + sum_j mb[j,b] mp[j,p] (mod 2).
Gf2Matrix cross_propagation(const CpcCode &code);

struct EffectiveCodes {
  /// Bits d1..dk then p1..p_{n_p}; one check per bit-check qubit.
  ClassicalCode bit;
  /// Bits d1..dk then b1..b_{n_b}; one check per phase-check qubit.
  ClassicalCode phase;
};

EffectiveCodes effective_codes(const CpcCode &code);

struct GeneralPropagation {
  /// n_c x n_c. arrows(i, j) with i != j is set iff check i detects a phase
  /// error on check j.
  Gf2Matrix arrows;
  /// self_loops[c] is set iff a phase error on check c flips its own outcome.
  std::vector<bool> self_loops;
};

GeneralPropagation general_propagation(const GeneralCpcCode &code);

/// Bits are d1.x..dk.x (bit-flip side), d1.z..dk.z (phase side), then
/// c1..c_{n_c} (phase errors on checks); one check per check qubit.
ClassicalCode general_to_classical(const GeneralCpcCode &code);

/// Check qubits (global indices) that share no gate with a data qubit.
std::vector<size_t> harmless_qubits(const CpcCode &code);
std::vector<size_t> harmless_qubits(const GeneralCpcCode &code);
std::vector<size_t> harmless_qubits(const AnyCode &code);

/// Sorted check indices flagged by an error on `bit`.
std::vector<size_t> classical_syndrome(const ClassicalCode &code, size_t bit);

}  // namespace cpc

#endif  // CPC_PROPAGATION_H_
