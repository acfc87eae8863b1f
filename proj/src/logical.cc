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

#include "cpc/logical.h"

#include <stdexcept>

#include "cpc/decoding.h"

namespace cpc {

LogicalPauliFrame logical_pauli_frame(const CpcCode &code, std::string_view paulis) {
  require_valid(code);
  if (paulis.size() != code.k) {
    throw std::invalid_argument("logical_pauli_frame: expected one Pauli per data qubit");
  }
  size_t n = code.qubit_count();
  LogicalPauliFrame frame{PauliString(n), {}, {}};
  for (size_t d = 0; d < code.k; d++) {
    frame.gates *= PauliString::single(n, d, paulis[d]);
  }
  frame.gates.set_phase(0);
  Syndrome s = propagate_error(code, frame.gates).syndrome;
  for (size_t i = 0; i < code.n_b; i++) {
    if ((s >> i) & 1) {
      frame.bit_toggles.push_back(i);
    }
  }
  for (size_t i = 0; i < code.n_p; i++) {
    if ((s >> (code.n_b + i)) & 1) {
      frame.phase_toggles.push_back(i);
    }
  }
  return frame;
}

Circuit commute_hadamard(const Circuit &circuit, size_t q) {
  if (q >= circuit.qubit_count) {
    throw std::invalid_argument("commute_hadamard: qubit out of range");
  }
  Circuit out{circuit.qubit_count, {}};
  for (const Gate &g : circuit.gates) {
    if (!g.touches(q) || g.kind == GateKind::kH) {
      out.gates.push_back(g);
      continue;
    }
    size_t other = g.a == q ? g.b : g.a;
    switch (g.kind) {
      case GateKind::kCnot:
        out.gates.push_back(g.a == q ? Gate::cczx(q, other) : Gate::cz(other, q));
        break;
      case GateKind::kCz:
        out.gates.push_back(Gate::cnot(other, q));
        break;
      case GateKind::kCczx:
        out.gates.push_back(Gate::cnot(q, other));
        break;
      case GateKind::kH:
        break;
    }
  }
  return out;
}

Circuit commute_cnot(const Circuit &circuit, size_t c, size_t t) {
  if (c >= circuit.qubit_count || t >= circuit.qubit_count || c == t) {
    throw std::invalid_argument("commute_cnot: need distinct qubits in range");
  }
  Gate cnot = Gate::cnot(c, t);
  Circuit out{circuit.qubit_count, {}};
  for (const Gate &g : circuit.gates) {
    out.gates.push_back(g);
    if (!g.touches(c) && !g.touches(t)) {
      continue;
    }
    if (g.kind != GateKind::kCnot) {
      throw std::invalid_argument("commute_cnot: gate '" + g.str() + "' is not a CNOT");
    }
    CommutatorResult comm = cnot_commutator(cnot, g);
    if (comm.opaque) {
      throw std::invalid_argument("commute_cnot: gate '" + g.str() + "' reverses the logical CNOT");
    }
    out.gates.insert(out.gates.end(), comm.gates.begin(), comm.gates.end());
  }
  return out;
}

Circuit logical_hadamard_circuit(const CpcCode &code, size_t d) {
  if (d >= code.k) {
    throw std::invalid_argument("logical_hadamard_circuit: data index out of range");
  }
  Circuit enc = encode_circuit(code);
  Circuit out{enc.qubit_count, {Gate::h(d)}};
  out.append(commute_hadamard(enc, d));
  return out;
}

Circuit logical_cnot_circuit(const CpcCode &code, size_t c, size_t t) {
  if (c >= code.k || t >= code.k || c == t) {
    throw std::invalid_argument("logical_cnot_circuit: need distinct data indices below k");
  }
  Circuit enc = encode_circuit(code);
  Circuit out{enc.qubit_count, {Gate::cnot(c, t)}};
  out.append(commute_cnot(enc, c, t));
  return out;
}

}  // namespace cpc
