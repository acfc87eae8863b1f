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

#include "cpc/circuit.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cpc {

std::string Gate::str() const {
  switch (kind) {
    case GateKind::kCnot:
      return "CNOT " + std::to_string(a) + " " + std::to_string(b);
    case GateKind::kCz:
      return "CZ " + std::to_string(a) + " " + std::to_string(b);
    case GateKind::kCczx:
      return "CCZX " + std::to_string(a) + " " + std::to_string(b);
    case GateKind::kH:
      return "H " + std::to_string(a);
  }
  return "";
}

bool Gate::operator==(const Gate &other) const {
  if (kind != other.kind) {
    return false;
  }
  if (kind == GateKind::kH) {
    return a == other.a;
  }
  return a == other.a && b == other.b;
}

void Circuit::append(const Circuit &other) {
  if (other.qubit_count != qubit_count) {
    throw std::invalid_argument("Circuit::append: qubit count mismatch");
  }
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

Circuit Circuit::reversed() const {
  Circuit out{qubit_count, gates};
  std::reverse(out.gates.begin(), out.gates.end());
  return out;
}

void Circuit::validate() const {
  for (const Gate &g : gates) {
    if (g.a >= qubit_count || (g.is_two_qubit() && g.b >= qubit_count)) {
      throw std::invalid_argument("gate '" + g.str() + "' addresses a qubit >= " + std::to_string(qubit_count));
    }
    if (g.is_two_qubit() && g.a == g.b) {
      throw std::invalid_argument("gate '" + g.str() + "' repeats a qubit");
    }
  }
}

std::string Circuit::str() const {
  std::string out;
  for (const Gate &g : gates) {
    out += g.str();
    out += '\n';
  }
  return out;
}

Circuit parse_circuit(std::string_view text, size_t qubit_count) {
  Circuit circuit{qubit_count, {}};
  std::istringstream in{std::string(text)};
  std::string line;
  size_t number = 0;
  while (std::getline(in, line)) {
    number++;
    size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream fields(line);
    std::string name;
    if (!(fields >> name)) {
      continue;
    }
    size_t a = 0, b = 0;
    bool ok;
    if (name == "H") {
      ok = bool(fields >> a);
      b = a;
    } else {
      ok = bool(fields >> a >> b);
    }
    std::string extra;
    if (!ok || (fields >> extra)) {
      throw std::invalid_argument("line " + std::to_string(number) + ": malformed gate '" + line + "'");
    }
    if (name == "CNOT") {
      circuit.gates.push_back(Gate::cnot(a, b));
    } else if (name == "CZ") {
      circuit.gates.push_back(Gate::cz(a, b));
    } else if (name == "CCZX") {
      circuit.gates.push_back(Gate::cczx(a, b));
    } else if (name == "H") {
      circuit.gates.push_back(Gate::h(a));
    } else {
      throw std::invalid_argument("line " + std::to_string(number) + ": unknown gate '" + name + "'");
    }
  }
  circuit.validate();
  return circuit;
}

Circuit encode_circuit(const CpcCode &code) {
  require_valid(code);
  Circuit c{code.qubit_count(), {}};
  for (size_t i = 0; i < code.n_b; i++) {
    for (size_t d = 0; d < code.k; d++) {
      if (code.mb.get(d, i)) {
        c.gates.push_back(Gate::cnot(d, code.bit_qubit(i)));
      }
    }
  }
  for (size_t i = 0; i < code.n_p; i++) {
    for (size_t d = 0; d < code.k; d++) {
      if (code.mp.get(d, i)) {
        c.gates.push_back(Gate::cnot(code.phase_qubit(i), d));
      }
    }
  }
  for (size_t i = 0; i < code.n_p; i++) {
    for (size_t b = 0; b < code.n_b; b++) {
      if (code.mc.get(b, i)) {
        c.gates.push_back(Gate::cnot(code.phase_qubit(i), code.bit_qubit(b)));
      }
    }
  }
  return c;
}

Circuit encode_circuit(const GeneralCpcCode &code) {
  require_valid(code);
  Circuit c{code.qubit_count(), {}};
  for (size_t i = 0; i < code.n_c; i++) {
    for (size_t d = 0; d < code.k; d++) {
      if (code.mbs.get(d, i)) {
        c.gates.push_back(Gate::cnot(d, code.check_qubit(i)));
      }
    }
  }
  for (size_t i = 0; i < code.n_c; i++) {
    for (size_t d = 0; d < code.k; d++) {
      if (code.mps.get(d, i)) {
        c.gates.push_back(Gate::cczx(d, code.check_qubit(i)));
      }
    }
  }
  for (size_t i = 0; i < code.n_c; i++) {
    for (size_t j = i + 1; j < code.n_c; j++) {
      if (code.mcs.get(i, j)) {
        c.gates.push_back(Gate::cczx(code.check_qubit(i), code.check_qubit(j)));
      }
    }
  }
  return c;
}

Circuit encode_circuit(const AnyCode &code) {
  return std::visit([](const auto &c) { return encode_circuit(c); }, code);
}

Circuit decode_circuit(const CpcCode &code) {
  return encode_circuit(code).reversed();
}

Circuit decode_circuit(const GeneralCpcCode &code) {
  return encode_circuit(code).reversed();
}

Circuit decode_circuit(const AnyCode &code) {
  return encode_circuit(code).reversed();
}

void apply_gate(PauliString &p, const Gate &gate) {
  switch (gate.kind) {
    case GateKind::kCnot:
      p.apply_cnot(gate.a, gate.b);
      break;
    case GateKind::kCz:
      p.apply_cz(gate.a, gate.b);
      break;
    case GateKind::kCczx:
      p.apply_cczx(gate.a, gate.b);
      break;
    case GateKind::kH:
      p.apply_h(gate.a);
      break;
  }
}

PauliString conjugate_pauli(const Circuit &circuit, const PauliString &p) {
  if (p.num_qubits() != circuit.qubit_count) {
    throw std::invalid_argument("conjugate_pauli: PauliString has " + std::to_string(p.num_qubits()) +
                                " qubits, circuit has " + std::to_string(circuit.qubit_count));
  }
  PauliString out = p;
  for (const Gate &g : circuit.gates) {
    apply_gate(out, g);
  }
  return out;
}

CommutatorResult cnot_commutator(const Gate &g1, const Gate &g2) {
  if (g1.kind != GateKind::kCnot || g2.kind != GateKind::kCnot) {
    throw std::invalid_argument("cnot_commutator: both gates must be CNOTs");
  }
  size_t i = g1.a, j = g1.b, k = g2.a, l = g2.b;
  bool jk = j == k;
  bool il = i == l;
  CommutatorResult out;
  if (jk && il) {
    out.opaque = true;
  } else if (jk) {
    out.gates.push_back(Gate::cnot(i, l));
  } else if (il) {
    out.gates.push_back(Gate::cnot(k, j));
  }
  return out;
}

bool circuits_equal(const Circuit &c1, const Circuit &c2) {
  if (c1.qubit_count != c2.qubit_count) {
    throw std::invalid_argument("circuits_equal: qubit count mismatch");
  }
  size_t n = c1.qubit_count;
  for (size_t q = 0; q < n; q++) {
    for (char kind : {'X', 'Z'}) {
      PauliString p = PauliString::single(n, q, kind);
      if (conjugate_pauli(c1, p) != conjugate_pauli(c2, p)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace cpc
