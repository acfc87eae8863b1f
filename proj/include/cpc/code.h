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

#ifndef CPC_CODE_H_
#define CPC_CODE_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cpc/gf2.h"

namespace cpc {

/// Split code: data qubits, bit-flip checks (CNOT targets, measured in Z) and
/// phase checks (CNOT controls, measured in X).
///
/// Qubit order is d_1..d_k, b_1..b_{n_b}, p_1..p_{n_p}.
struct CpcCode {
  size_t k = 0;
  size_t n_b = 0;
  size_t n_p = 0;
  Gf2Matrix mb;  // k x n_b, CNOT(d_j -> b_i)
  Gf2Matrix mp;  // k x n_p, CNOT(p_i -> d_j)
  Gf2Matrix mc;  // n_b x n_p, CNOT(p -> b)

  size_t qubit_count() const { return k + n_b + n_p; }
  size_t bit_qubit(size_t i) const { return k + i; }
  size_t phase_qubit(size_t i) const { return k + n_b + i; }

  bool operator==(const CpcCode &other) const = default;
};

/// Generalized code with a single species of check qubit. Check qubits start in
/// |0> and are measured in Z.
///
/// Qubit order is d_1..d_k, c_1..c_{n_c}.
struct GeneralCpcCode {
  size_t k = 0;
  size_t n_c = 0;
  Gf2Matrix mbs;  // k x n_c, CNOT(d_j -> c_i)
  Gf2Matrix mps;  // k x n_c, CCZX(d_j, c_i)
  Gf2Matrix mcs;  // n_c x n_c strictly upper triangular, CCZX(c_i, c_j)

  size_t qubit_count() const { return k + n_c; }
  size_t check_qubit(size_t i) const { return k + i; }

  bool operator==(const GeneralCpcCode &other) const = default;
};

using AnyCode = std::variant<CpcCode, GeneralCpcCode>;

/// Classical parity-check code over "effective bits".
struct ClassicalCode {
  struct Check {
    std::string label;
    std::vector<size_t> bits;  // sorted
  };
  size_t bit_count = 0;
  std::vector<std::string> bit_labels;
  std::vector<Check> checks;
  std::vector<size_t> harmless;  // sorted bit ids that never reach data

  bool operator==(const ClassicalCode &other) const;
};

/// Thrown by `parse_code` with a 1-based location.
class ParseError : public std::runtime_error {
 public:
  ParseError(size_t line, size_t column, const std::string &message);
  size_t line() const { return line_; }
  size_t column() const { return column_; }

 private:
  size_t line_;
  size_t column_;
};

/// Lists every violated invariant; empty means valid.
std::vector<std::string> validate(const CpcCode &code);
std::vector<std::string> validate(const GeneralCpcCode &code);
std::vector<std::string> validate(const AnyCode &code);

/// Throws std::invalid_argument listing the violations, if any.
void require_valid(const CpcCode &code);
void require_valid(const GeneralCpcCode &code);

AnyCode parse_code(std::string_view text);
std::string serialize(const CpcCode &code);
std::string serialize(const GeneralCpcCode &code);
std::string serialize(const AnyCode &code);
AnyCode load_code_file(const std::string &path);

CpcCode make_code(const Gf2Matrix &mb, const Gf2Matrix &mp, const Gf2Matrix &mc);
GeneralCpcCode make_general_code(const Gf2Matrix &mbs, const Gf2Matrix &mps, const Gf2Matrix &mcs);

CpcCode from_classical(const Gf2Matrix &h_bit, const Gf2Matrix &h_phase, const Gf2Matrix &mc);

/// Embeds a split code: bit checks become c_1..c_{n_b}, phase checks become
/// c_{n_b+1}..c_{n_b+n_p}.
GeneralCpcCode generalize(const CpcCode &code);

/// Labels in global qubit order: "d1", "b1", "p1" or "d1", "c1".
std::vector<std::string> qubit_labels(const CpcCode &code);
std::vector<std::string> qubit_labels(const GeneralCpcCode &code);
std::vector<std::string> qubit_labels(const AnyCode &code);

size_t data_count(const AnyCode &code);
size_t qubit_count(const AnyCode &code);

}  // namespace cpc

#endif  // CPC_CODE_H_
