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

#ifndef CPC_CIRCUIT_H_
#define CPC_CIRCUIT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cpc/code.h"
#include "cpc/pauli.h"

namespace cpc {

enum class GateKind { kCnot, kCz, kCczx, kH };

/// A Clifford gate. For CNOT, `a` is the control and `b` the target. CZ and
/// CCZX are symmetric. H uses only `a`.
struct Gate {
  GateKind kind = GateKind::kH;
  size_t a = 0;
  size_t b = 0;

  static Gate cnot(size_t control, size_t target) { return {GateKind::kCnot, control, target}; }
  static Gate cz(size_t a, size_t b) { return {GateKind::kCz, a, b}; }
  static Gate cczx(size_t a, size_t b) { return {GateKind::kCczx, a, b}; }
  static Gate h(size_t q) { return {GateKind::kH, q, q}; }

  bool is_two_qubit() const { return kind != GateKind::kH; }
  bool touches(size_t q) const { return a == q || (is_two_qubit() && b == q); }
  std::string str() const;

  bool operator==(const Gate &other) const;
};

struct Circuit {
  size_t qubit_count = 0;
  std::vector<Gate> gates;

  void append(const Circuit &other);
  Circuit reversed() const;
  /// Throws std::invalid_argument on out-of-range or repeated qubit indices.
  void validate() const;
  /// One gate per line, e.g. "CNOT 0 4".
  std::string str() const;

  bool operator==(const Circuit &other) const = default;
};

Circuit parse_circuit(std::string_view text, size_t qubit_count);

/// Split codes: B block CNOT(d -> b), P block CNOT(p -> d), C block
/// CNOT(p -> b). General codes: CNOT(d -> c), CCZX(d, c), CCZX(c_i, c_j).
/// Within a block gates are ordered by check index, then by the other index.
Circuit encode_circuit(const CpcCode &code);
Circuit encode_circuit(const GeneralCpcCode &code);
Circuit encode_circuit(const AnyCode &code);
/// The encode gates in reverse order.
Circuit decode_circuit(const CpcCode &code);
Circuit decode_circuit(const GeneralCpcCode &code);
Circuit decode_circuit(const AnyCode &code);

void apply_gate(PauliString &p, const Gate &gate);
/// Returns U p U^dagger where U applies the gates in order.
PauliString conjugate_pauli(const Circuit &circuit, const PauliString &p);

/// Operational commutator U1 U2 U1^dagger U2^dagger of two CNOTs.
struct CommutatorResult {
  /// Set when both qubits are shared with swapped roles.
  bool opaque = false;
  std::vector<Gate> gates;
};
CommutatorResult cnot_commutator(const Gate &g1, const Gate &g2);

/// True iff both circuits conjugate every X_q and Z_q to the same Pauli,
/// including sign. This is equality of the unitaries up to global phase.
bool circuits_equal(const Circuit &c1, const Circuit &c2);

}  // namespace cpc

#endif  // CPC_CIRCUIT_H_
