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

#include "cpc/statevector.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace cpc {

StateVector::StateVector(size_t num_qubits) : n_(num_qubits) {
  if (num_qubits > kMaxStatevectorQubits) {
    throw std::invalid_argument("StateVector: too many qubits");
  }
  amps_.assign(size_t{1} << num_qubits, Amplitude(0));
  amps_[0] = 1;
}

StateVector::StateVector(std::vector<Amplitude> amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty() || !std::has_single_bit(amps_.size())) {
    throw std::invalid_argument("StateVector: amplitude count must be a power of two");
  }
  n_ = std::countr_zero(amps_.size());
  if (n_ > kMaxStatevectorQubits) {
    throw std::invalid_argument("StateVector: too many qubits");
  }
}

void StateVector::check_qubit(size_t q) const {
  if (q >= n_) {
    throw std::out_of_range("StateVector: qubit out of range");
  }
}

void StateVector::apply_x(size_t q) {
  check_qubit(q);
  size_t bit = size_t{1} << q;
  for (size_t i = 0; i < amps_.size(); i++) {
    if (!(i & bit)) {
      std::swap(amps_[i], amps_[i | bit]);
    }
  }
}

void StateVector::apply_y(size_t q) {
  check_qubit(q);
  size_t bit = size_t{1} << q;
  const Amplitude i_unit(0, 1);
  for (size_t i = 0; i < amps_.size(); i++) {
    if (!(i & bit)) {
      Amplitude a0 = amps_[i];
      Amplitude a1 = amps_[i | bit];
      amps_[i] = -i_unit * a1;
      amps_[i | bit] = i_unit * a0;
    }
  }
}

void StateVector::apply_z(size_t q) {
  check_qubit(q);
  size_t bit = size_t{1} << q;
  for (size_t i = 0; i < amps_.size(); i++) {
    if (i & bit) {
      amps_[i] = -amps_[i];
    }
  }
}

void StateVector::apply_h(size_t q) {
  check_qubit(q);
  size_t bit = size_t{1} << q;
  const double s = std::sqrt(0.5);
  for (size_t i = 0; i < amps_.size(); i++) {
    if (!(i & bit)) {
      Amplitude a0 = amps_[i];
      Amplitude a1 = amps_[i | bit];
      amps_[i] = s * (a0 + a1);
      amps_[i | bit] = s * (a0 - a1);
    }
  }
}

void StateVector::apply_cnot(size_t control, size_t target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) {
    throw std::invalid_argument("CNOT on a single qubit");
  }
  size_t cb = size_t{1} << control;
  size_t tb = size_t{1} << target;
  for (size_t i = 0; i < amps_.size(); i++) {
    if ((i & cb) && !(i & tb)) {
      std::swap(amps_[i], amps_[i | tb]);
    }
  }
}

void StateVector::apply_cz(size_t a, size_t b) {
  check_qubit(a);
  check_qubit(b);
  if (a == b) {
    throw std::invalid_argument("CZ on a single qubit");
  }
  size_t mask = (size_t{1} << a) | (size_t{1} << b);
  for (size_t i = 0; i < amps_.size(); i++) {
    if ((i & mask) == mask) {
      amps_[i] = -amps_[i];
    }
  }
}

void StateVector::apply_cczx(size_t a, size_t b) {
  apply_h(a);
  apply_h(b);
  apply_cz(a, b);
  apply_h(a);
  apply_h(b);
}

void StateVector::apply_rx_phase(size_t q, double theta) {
  check_qubit(q);
  size_t bit = size_t{1} << q;
  const Amplitude c(std::cos(theta), 0);
  const Amplitude s(0, std::sin(theta));
  for (size_t i = 0; i < amps_.size(); i++) {
    if (!(i & bit)) {
      Amplitude a0 = amps_[i];
      Amplitude a1 = amps_[i | bit];
      amps_[i] = c * a0 + s * a1;
      amps_[i | bit] = s * a0 + c * a1;
    }
  }
}

void StateVector::apply_gate(const Gate &gate) {
  switch (gate.kind) {
    case GateKind::kCnot:
      apply_cnot(gate.a, gate.b);
      break;
    case GateKind::kCz:
      apply_cz(gate.a, gate.b);
      break;
    case GateKind::kCczx:
      apply_cczx(gate.a, gate.b);
      break;
    case GateKind::kH:
      apply_h(gate.a);
      break;
  }
}

void StateVector::apply_circuit(const Circuit &circuit) {
  if (circuit.qubit_count != n_) {
    throw std::invalid_argument("StateVector: circuit qubit count mismatch");
  }
  for (const Gate &g : circuit.gates) {
    apply_gate(g);
  }
}

void StateVector::apply_pauli(const PauliString &p) {
  if (p.num_qubits() != n_) {
    throw std::invalid_argument("StateVector: Pauli length mismatch");
  }
  // Hermitian factors on distinct qubits commute, so order is irrelevant.
  for (size_t q = 0; q < n_; q++) {
    switch (p.at(q)) {
      case 'X':
        apply_x(q);
        break;
      case 'Y':
        apply_y(q);
        break;
      case 'Z':
        apply_z(q);
        break;
      default:
        break;
    }
  }
  static const Amplitude kPhases[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  if (p.phase() != 0) {
    for (auto &a : amps_) {
      a *= kPhases[p.phase()];
    }
  }
}

double StateVector::probability_one(size_t q) const {
  check_qubit(q);
  size_t bit = size_t{1} << q;
  double p = 0;
  for (size_t i = 0; i < amps_.size(); i++) {
    if (i & bit) {
      p += std::norm(amps_[i]);
    }
  }
  return p;
}

double StateVector::project(size_t q, bool value) {
  check_qubit(q);
  size_t bit = size_t{1} << q;
  double p = 0;
  for (size_t i = 0; i < amps_.size(); i++) {
    if (bool(i & bit) == value) {
      p += std::norm(amps_[i]);
    } else {
      amps_[i] = 0;
    }
  }
  return p;
}

bool StateVector::measure(size_t q, std::mt19937_64 &rng) {
  double p1 = probability_one(q);
  double r = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  bool outcome = r < p1;
  double p = project(q, outcome);
  if (p <= 0) {
    throw std::logic_error("StateVector: measured a zero-probability outcome");
  }
  double scale = 1 / std::sqrt(p);
  for (auto &a : amps_) {
    a *= scale;
  }
  return outcome;
}

double StateVector::norm() const {
  double total = 0;
  for (const auto &a : amps_) {
    total += std::norm(a);
  }
  return std::sqrt(total);
}

void StateVector::normalize() {
  double n = norm();
  if (n <= 0) {
    throw std::logic_error("StateVector: cannot normalize the zero vector");
  }
  for (auto &a : amps_) {
    a /= n;
  }
}

Amplitude StateVector::inner(const StateVector &other) const {
  if (other.n_ != n_) {
    throw std::invalid_argument("StateVector: qubit count mismatch");
  }
  Amplitude total(0);
  for (size_t i = 0; i < amps_.size(); i++) {
    total += std::conj(amps_[i]) * other.amps_[i];
  }
  return total;
}

StateVector tensor(const StateVector &low, const StateVector &high) {
  size_t dl = low.amplitudes().size();
  size_t dh = high.amplitudes().size();
  std::vector<Amplitude> amps(dl * dh);
  for (size_t h = 0; h < dh; h++) {
    for (size_t l = 0; l < dl; l++) {
      amps[h * dl + l] = high.amplitudes()[h] * low.amplitudes()[l];
    }
  }
  return StateVector(std::move(amps));
}

std::vector<Amplitude> haar_state(size_t dim, std::mt19937_64 &rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Amplitude> amps(dim);
  double total = 0;
  for (auto &a : amps) {
    double re = gauss(rng);
    double im = gauss(rng);
    a = Amplitude(re, im);
    total += re * re + im * im;
  }
  double scale = 1 / std::sqrt(total);
  for (auto &a : amps) {
    a *= scale;
  }
  return amps;
}

}  // namespace cpc
