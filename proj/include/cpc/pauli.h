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

#ifndef CPC_PAULI_H_
#define CPC_PAULI_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cpc {

constexpr size_t kMaxPauliQubits = 64;

/// A Pauli product i^phase * P_0 (x) P_1 (x) ... with Hermitian factors.
///
/// Qubit q carries X if bit q of `xs` is set, Z if bit q of `zs` is set, and Y
/// if both are set. At most 64 qubits.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(size_t num_qubits);
  PauliString(size_t num_qubits, uint64_t xs, uint64_t zs, uint8_t phase = 0);

  /// `pauli` is one of 'I', 'X', 'Y', 'Z'.
  static PauliString single(size_t num_qubits, size_t q, char pauli);
  /// Parses e.g. "+XIZ", "-iY_Z" or "XX". '_' and 'I' both mean identity.
  static PauliString from_text(std::string_view text);

  size_t num_qubits() const { return n_; }
  uint64_t xs() const { return xs_; }
  uint64_t zs() const { return zs_; }
  /// Exponent of i, in 0..3.
  uint8_t phase() const { return phase_; }
  void set_phase(uint8_t phase) { phase_ = phase & 3; }

  char at(size_t q) const;
  bool x(size_t q) const { return (xs_ >> q) & 1; }
  bool z(size_t q) const { return (zs_ >> q) & 1; }
  size_t weight() const;
  bool is_identity() const { return xs_ == 0 && zs_ == 0; }
  /// Support restricted to qubits [begin, begin + count), renumbered from 0.
  PauliString slice(size_t begin, size_t count) const;

  bool commutes(const PauliString &other) const;
  bool equal_up_to_phase(const PauliString &other) const;
  PauliString operator*(const PauliString &other) const;
  PauliString &operator*=(const PauliString &other);
  bool operator==(const PauliString &other) const = default;
  bool operator<(const PauliString &other) const;

  // In-place conjugation P -> U P U^dagger.
  void apply_h(size_t q);
  void apply_cnot(size_t control, size_t target);
  void apply_cz(size_t a, size_t b);
  void apply_cczx(size_t a, size_t b);

  /// Dense text such as "+XIZ" or "-iY_Z" (identity printed as 'I').
  std::string str() const;
  /// Grouped label form such as "Z d1 d2 b1" or "-Z c1 X d3 c5"; "I" for identity.
  std::string str_labels(const std::vector<std::string> &labels) const;

 private:
  void check_qubit(size_t q) const;

  size_t n_ = 0;
  uint64_t xs_ = 0;
  uint64_t zs_ = 0;
  uint8_t phase_ = 0;
};

}  // namespace cpc

#endif  // CPC_PAULI_H_
