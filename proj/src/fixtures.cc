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

#include "cpc/fixtures.h"

namespace cpc::fixtures {

namespace {

Gf2Matrix m(std::initializer_list<const char *> rows) {
  std::vector<std::string> v(rows.begin(), rows.end());
  return Gf2Matrix::from_strings(v);
}

}  // namespace

Gf2Matrix three_bit_parity() {
  return m({"101", "110", "011"});
}

Gf2Matrix hamming_7_4_data_rows() {
  return m({"101", "110", "111", "011"});
}

Gf2Matrix hamming_7_4_check() {
  return m({"1010101", "0110011", "0001111"});
}

CpcCode code_6_3_1() {
  return make_code(three_bit_parity(), Gf2Matrix(3, 0), Gf2Matrix(3, 0));
}

CpcCode code_11_3_3() {
  Gf2Matrix data = m({"1010", "1100", "0110"});
  return make_code(data, data, m({"0011", "1001", "0101", "1111"}));
}

CpcCode code_11_3_1() {
  Gf2Matrix data = m({"1010", "1100", "0110"});
  return make_code(data, data, m({"0001", "0001", "0001", "1111"}));
}

CpcCode code_12_4_3() {
  Gf2Matrix data = m({"1010", "1100", "1110", "0110"});
  return make_code(data, data, m({"0011", "1001", "0101", "1111"}));
}

CpcCode code_11_3_3_cnot() {
  Gf2Matrix data = m({"0011", "1001", "1100"});
  return make_code(data, data, m({"1011", "0111", "1110", "1101"}));
}

CpcCode code_12_4_3_cnot() {
  Gf2Matrix data = m({"0011", "0101", "1001", "1101"});
  return make_code(data, data, m({"1010", "1011", "1110", "0111"}));
}

CpcCode code_13_3_3() {
  return make_code(m({"10101", "11000", "01100"}), m({"10100", "11001", "01100"}),
                   m({"00110", "10010", "01010", "11111", "00011"}));
}

GeneralCpcCode code_10_3_3() {
  return make_general_code(m({"1010000", "1100000", "0110000"}), m({"0001010", "0001100", "0000110"}),
                           m({"0000011", "0001001", "0000101", "0000001", "0000001", "0000001", "0000000"}));
}

}  // namespace cpc::fixtures
