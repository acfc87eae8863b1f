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

#ifndef CPC_DECODING_H_
#define CPC_DECODING_H_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpc/code.h"
#include "cpc/pauli.h"

namespace cpc {

/// Syndrome bit i belongs to check qubit k + i: bit checks then phase checks
/// for split codes, c_1..c_{n_c} for general codes. Bit checks and general
/// checks report X support after decoding; phase checks report Z support.
using Syndrome = uint64_t;

size_t check_count(const AnyCode &code);
std::vector<std::string> check_labels(const AnyCode &code);
/// e.g. "{b1,b3}".
std::string syndrome_str(Syndrome s, const std::vector<std::string> &check_labels);
/// '0'/'1' string, one character per check.
std::string syndrome_bits(Syndrome s, size_t check_count);
Syndrome parse_syndrome_bits(const std::string &bits);

struct ErrorEffect {
  Syndrome syndrome = 0;
  /// Pauli left on the data qubits after decoding (k qubits).
  PauliString data_residual;
};

/// Propagates an error inserted between encode and decode.
ErrorEffect propagate_error(const AnyCode &code, const PauliString &error);

struct ErrorEntry {
  PauliString error;
  Syndrome syndrome = 0;
  PauliString data_residual;
  /// On a data qubit or on a check qubit that shares a gate with data.
  bool harmful = false;
};

struct ErrorTable {
  size_t check_count = 0;
  /// Per qubit in order: X, Z, Y.
  std::vector<ErrorEntry> entries;

  const ErrorEntry &find(const PauliString &error) const;
};

ErrorTable error_table(const AnyCode &code);

struct Collision {
  /// `a` is the identity when a harmful error is undetected.
  PauliString a;
  PauliString b;
  Syndrome syndrome = 0;
};

struct CorrectabilityReport {
  bool ok = false;
  std::vector<Collision> collisions;

  /// One line per collision, e.g. "Z b1 ~ Z p4 -> {p4}".
  std::string certificate(const AnyCode &code) const;
};

CorrectabilityReport is_single_error_correcting(const AnyCode &code);

enum class DecodeClass { kNoError, kHarmless, kCorrected, kUncorrectable };
const char *decode_class_name(DecodeClass c);

struct DecodeEntry {
  /// Pauli to apply on the data qubits (k qubits).
  PauliString correction;
  DecodeClass cls = DecodeClass::kUncorrectable;
  /// The single-qubit error assumed by the decoder; identity otherwise.
  PauliString explanation;
};

struct DecodeTable {
  size_t data_count = 0;
  size_t check_count = 0;
  std::map<Syndrome, DecodeEntry> entries;
};

class UncorrectableCodeError : public std::runtime_error {
 public:
  UncorrectableCodeError(const std::string &message, CorrectabilityReport report)
      : std::runtime_error(message), report_(std::move(report)) {
  }
  const CorrectabilityReport &report() const { return report_; }

 private:
  CorrectabilityReport report_;
};

/// Throws UncorrectableCodeError when the code is not single-error correcting.
DecodeTable decode_table(const AnyCode &code);
/// Always succeeds. On collisions prefers the zero syndrome, then explanations
/// with no data residual, then the first entry of the error table.
DecodeTable decode_table_best_effort(const AnyCode &code);
/// Unknown syndromes decode to identity with class kUncorrectable.
DecodeEntry decode(const DecodeTable &table, Syndrome syndrome);

/// Requires unique syndromes for X_c X_t and Z_c Z_t in addition to single
/// errors. Indices are 0-based data qubits.
CorrectabilityReport cnot_compatible(const CpcCode &code, size_t c, size_t t);

/// Adds a bit check on d_c and a phase check on d_t, linked to each other and
/// to the first existing checks without data edges.
CpcCode augment_for_cnot(const CpcCode &code, size_t c, size_t t);

}  // namespace cpc

#endif  // CPC_DECODING_H_
