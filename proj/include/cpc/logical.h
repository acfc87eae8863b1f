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

#ifndef CPC_LOGICAL_H_
#define CPC_LOGICAL_H_

#include <string_view>
#include <vector>

#include "cpc/circuit.h"
#include "cpc/code.h"
#include "cpc/pauli.h"

namespace cpc {

/// Paulis applied to the data between encode and decode, and the matching
/// reinterpretation of check outcomes.
struct LogicalPauliFrame {
  /// Physical Paulis on all qubits; non-identity only on data.
  PauliString gates;
  /// Bit-check indices whose 0/1 outcome is read inverted.
  std::vector<size_t> bit_toggles;
  /// Phase-check indices whose +/- outcome is read inverted.
  std::vector<size_t> phase_toggles;
};

/// `paulis` holds one of 'I', 'X', 'Y', 'Z' per data qubit.
LogicalPauliFrame logical_pauli_frame(const CpcCode &code, std::string_view paulis);

/// Rewrites `circuit` so that [H(q)] followed by the result equals `circuit`
/// followed by H(q).
Circuit commute_hadamard(const Circuit &circuit, size_t q);
/// Rewrites `circuit` so that [CNOT(c, t)] followed by the result equals
/// `circuit` followed by CNOT(c, t). Gates touching c or t must be CNOTs.
Circuit commute_cnot(const Circuit &circuit, size_t c, size_t t);

/// Encoder for a cycle that also applies H on data qubit d.
Circuit logical_hadamard_circuit(const CpcCode &code, size_t d);
/// Encoder for a cycle that also applies CNOT(d_c, d_t).
Circuit logical_cnot_circuit(const CpcCode &code, size_t c, size_t t);

}  // namespace cpc

#endif  // CPC_LOGICAL_H_
