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

#ifndef CPC_STABILIZERS_H_
#define CPC_STABILIZERS_H_

#include <optional>
#include <vector>

#include "cpc/code.h"
#include "cpc/gf2.h"
#include "cpc/pauli.h"

namespace cpc {

/// Z-type generators (one per bit check) followed by X-type generators (one
/// per phase check).
std::vector<PauliString> stabilizers_split(const CpcCode &code);
/// One generator per check qubit.
std::vector<PauliString> stabilizers_general(const GeneralCpcCode &code);
std::vector<PauliString> stabilizers(const AnyCode &code);

/// Images of the initial check stabilizers (Z on checks prepared in |0>, X on
/// checks prepared in |+>) under the encode circuit.
std::vector<PauliString> circuit_stabilizers(const AnyCode &code);

/// Symplectic layout: row r of the generator list has Z part `g_z` row r and X
/// part `g_x` row r.
struct SymplecticForm {
  Gf2Matrix g_z;
  Gf2Matrix g_x;
};

SymplecticForm symplectic_matrix(const CpcCode &code);
SymplecticForm symplectic_form(const std::vector<PauliString> &generators, size_t num_qubits);
/// G_Z G_X^T + G_X G_Z^T.
Gf2Matrix symplectic_products(const SymplecticForm &form);

/// CSS presentation: Z-type checks `g_z` and X-type checks `g_x`, each with
/// one column per qubit.
struct CssCode {
  Gf2Matrix g_z;
  Gf2Matrix g_x;
};

struct CssConversion {
  CpcCode code;
  /// permutation[c] is the input column that became qubit c of `code`.
  std::vector<size_t> permutation;
};

/// Throws std::invalid_argument for non-commuting input and
/// std::runtime_error when no disjoint pivot assignment exists.
CssConversion css_to_cpc(const Gf2Matrix &g_z, const Gf2Matrix &g_x);
CssCode cpc_to_css(const CpcCode &code);
/// Stacks (g_z | 0) over (0 | g_x).
Gf2Matrix css_group_matrix(const CssCode &css);

CssCode parse_css(std::string_view text);
std::string serialize_css(const CssCode &css);

struct LogicalOperators {
  std::vector<PauliString> x;
  std::vector<PauliString> z;
};

LogicalOperators logical_operators(const AnyCode &code);

/// Minimum weight of a Pauli that commutes with every generator but is not in
/// their group; nullopt when none exists up to `w_max`.
std::optional<size_t> code_distance(const std::vector<PauliString> &generators, size_t num_qubits, size_t w_max);
std::optional<size_t> code_distance(const AnyCode &code, size_t w_max = 4);

}  // namespace cpc

#endif  // CPC_STABILIZERS_H_
