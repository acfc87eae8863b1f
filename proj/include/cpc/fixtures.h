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

#ifndef CPC_FIXTURES_H_
#define CPC_FIXTURES_H_

#include "cpc/code.h"
#include "cpc/gf2.h"

namespace cpc::fixtures {

/// Three-bit parity matrix; rows are data qubits A, B, C.
Gf2Matrix three_bit_parity();
/// Parity-check matrix of the [7,4] Hamming code, transposed to 4 x 3.
Gf2Matrix hamming_7_4_data_rows();
/// 3 x 7 parity-check matrix of the [7,4,3] Hamming code.
Gf2Matrix hamming_7_4_check();

/// Bit-flip-only code on three data qubits.
CpcCode code_6_3_1();
CpcCode code_11_3_3();
/// Same data connections as [[11,3,3]] with a cross-check pattern that leaves
/// the phase code degenerate.
CpcCode code_11_3_1();
CpcCode code_12_4_3();
/// [[11,3,3]] variant admitting a transversal logical CNOT(d1, d2).
CpcCode code_11_3_3_cnot();
/// [[12,4,3]] variant admitting a transversal logical CNOT(d1, d2).
CpcCode code_12_4_3_cnot();
/// [[11,3,3]] augmented with one extra bit and phase check for CNOT(d1, d2).
CpcCode code_13_3_3();
GeneralCpcCode code_10_3_3();

}  // namespace cpc::fixtures

#endif  // CPC_FIXTURES_H_
