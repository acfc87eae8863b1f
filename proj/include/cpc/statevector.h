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

#ifndef CPC_STATEVECTOR_H_
#define CPC_STATEVECTOR_H_

#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "cpc/circuit.h"
#include "cpc/pauli.h"

namespace cpc {

using Amplitude = std::complex<double>;

constexpr size_t kMaxStatevectorQubits = 24;

/// Dense pure state. Qubit q is bit q of the basis-state index.
class StateVector {
 public:
  /// |0...0> on n qubits.
  explicit StateVector(size_t num_qubits);
  explicit StateVector(std::vector<Amplitude> amplitudes);

  size_t num_qubits() const { return n_; }
  const std::vector<Amplitude> &amplitudes() const { return amps_; }

  void apply_x(size_t q);
  void apply_y(size_t q);
  void apply_z(size_t q);
  void apply_h(size_t q);
  void apply_cnot(size_t control, size_t target);
  void apply_cz(size_t a, size_t b);
  void apply_cczx(size_t a, size_t b);
  /// exp(i theta X_q) = cos(theta) I + i sin(theta) X_q.
  void apply_rx_phase(size_t q, double theta);
  void apply_gate(const Gate &gate);
  void apply_circuit(const Circuit &circuit);
  /// Applies the Pauli operator including its phase.
  void apply_pauli(const PauliString &p);

  double probability_one(size_t q) const;
  /// Projects qubit q onto `value` without renormalizing; returns the
  /// probability of that outcome.
  double project(size_t q, bool value);
  /// Born-rule Z measurement with collapse and renormalization.
  bool measure(size_t q, std::mt19937_64 &rng);
  double norm() const;
  void normalize();
  Amplitude inner(const StateVector &other) const;

 private:
  void check_qubit(size_t q) const;

  size_t n_;
  std::vector<Amplitude> amps_;
};

/// Tensor product with `low` on the low-index qubits.
StateVector tensor(const StateVector &low, const StateVector &high);

/// Haar-random pure state from normalized complex Gaussian amplitudes.
std::vector<Amplitude> haar_state(size_t dim, std::mt19937_64 &rng);

}  // namespace cpc

#endif  // CPC_STATEVECTOR_H_
