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


#include "cpc/code.h"

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "cpc/fixtures.h"
#include "test_util.h"

namespace cpc {
namespace {

Gf2Matrix m(std::vector<std::string> rows, size_t cols_if_empty = 0) {
  return Gf2Matrix::from_strings(rows, cols_if_empty);
}

TEST(CodeModel, ExampleCodeIsValid) {
  EXPECT_TRUE(validate(fixtures::code_11_3_3()).empty());
  EXPECT_TRUE(validate(fixtures::code_10_3_3()).empty());
}

TEST(CodeModel, DiagonalCrossCheckRejected) {
  GeneralCpcCode g;
  g.k = 1;
  g.n_c = 2;
  g.mbs = Gf2Matrix(1, 2);
  g.mps = Gf2Matrix(1, 2);
  g.mcs = m({"10", "00"});
  auto v = validate(g);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].find("not strictly upper triangular"), std::string::npos);
}

TEST(CodeModel, WrongRowCountRejected) {
  CpcCode c = fixtures::code_11_3_3();
  c.mb = m({"1010", "1100"});
  auto v = validate(c);
  ASSERT_FALSE(v.empty());
  EXPECT_NE(v[0].find("mb"), std::string::npos);
  EXPECT_THROW(require_valid(c), std::invalid_argument);
}

const char *kExampleText =
    "# three data qubits\n"
    "CPC split\n"
    "data 3\n"
    "bit 4\n"
    "phase 4\n"
    "\n"
    "B\n1010\n1100\n0110\n"
    "P\n1010\n1100\n0110\n"
    "C\n0011\n1001\n0101\n1111\n";

TEST(CodeModel, ParseExample) {
  AnyCode parsed = parse_code(kExampleText);
  ASSERT_TRUE(std::holds_alternative<CpcCode>(parsed));
  const CpcCode &c = std::get<CpcCode>(parsed);
  EXPECT_EQ(c.k, 3u);
  EXPECT_EQ(c.n_b, 4u);
  EXPECT_EQ(c.n_p, 4u);
  EXPECT_EQ(c, fixtures::code_11_3_3());
}

TEST(CodeModel, ParseEmptyCode) {
  AnyCode parsed = parse_code("CPC split\ndata 0\nbit 0\nphase 0\nB\nP\nC\n");
  const CpcCode &c = std::get<CpcCode>(parsed);
  EXPECT_EQ(c.qubit_count(), 0u);
  EXPECT_TRUE(validate(c).empty());
}

TEST(CodeModel, ParseErrorLocation) {
  std::string text = "CPC split\ndata 3\nbit 4\nphase 4\nB\n1010\n10a0\n0110\nP\n";
  try {
    parse_code(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 7u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(CodeModel, ParseRejectsStructuralErrors) {
  EXPECT_THROW(parse_code(""), ParseError);
  EXPECT_THROW(parse_code("CPC other\n"), ParseError);
  EXPECT_THROW(parse_code("CPC split\ndata 3\nbit 4\nphase 4\nB\n1010\n"), ParseError);
  EXPECT_THROW(parse_code("CPC split\ndata 1\nbit 1\nphase 1\nB\n10\nP\n1\nC\n1\n"), ParseError);
  EXPECT_THROW(parse_code("CPC general\ndata 1\nchecks 2\nB\n10\nP\n00\nC\n01\n10\n"), ParseError);
}

TEST(CodeModel, SerializeRoundTripRandom) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; i++) {
    CpcCode c = testing::random_small_code(rng);
    EXPECT_EQ(std::get<CpcCode>(parse_code(serialize(c))), c);
    GeneralCpcCode g = testing::random_small_general_code(rng);
    EXPECT_EQ(std::get<GeneralCpcCode>(parse_code(serialize(g))), g);
  }
}

TEST(CodeModel, FixtureFilesMatchBuilders) {
  const std::string dir = CPC_FIXTURES_DIR;
  EXPECT_EQ(std::get<CpcCode>(load_code_file(dir + "/6-3-1.cpc")), fixtures::code_6_3_1());
  EXPECT_EQ(std::get<CpcCode>(load_code_file(dir + "/11-3-1.cpc")), fixtures::code_11_3_1());
  EXPECT_EQ(std::get<CpcCode>(load_code_file(dir + "/11-3-3.cpc")), fixtures::code_11_3_3());
  EXPECT_EQ(std::get<CpcCode>(load_code_file(dir + "/12-4-3.cpc")), fixtures::code_12_4_3());
  EXPECT_EQ(std::get<CpcCode>(load_code_file(dir + "/13-3-3.cpc")), fixtures::code_13_3_3());
  EXPECT_EQ(std::get<CpcCode>(load_code_file(dir + "/11-3-3-cnot.cpc")), fixtures::code_11_3_3_cnot());
  EXPECT_EQ(std::get<CpcCode>(load_code_file(dir + "/12-4-3-cnot.cpc")), fixtures::code_12_4_3_cnot());
  EXPECT_EQ(std::get<GeneralCpcCode>(load_code_file(dir + "/10-3-3.cpc")), fixtures::code_10_3_3());
}

TEST(CodeModel, FromClassicalBuildsExampleCode) {
  // The three-bit parity matrix with a fourth bit check that only sees cross
  // checks.
  Gf2Matrix parity = hstack(fixtures::three_bit_parity(), Gf2Matrix(3, 1));
  Gf2Matrix mc = m({"0011", "1001", "0101", "1111"});
  EXPECT_EQ(from_classical(parity, parity, mc), fixtures::code_11_3_3());
}

TEST(CodeModel, FromClassicalBuildsHammingCode) {
  Gf2Matrix rows = hstack(fixtures::hamming_7_4_data_rows(), Gf2Matrix(4, 1));
  Gf2Matrix mc = m({"0011", "1001", "0101", "1111"});
  EXPECT_EQ(from_classical(rows, rows, mc), fixtures::code_12_4_3());
}

TEST(CodeModel, FromClassicalZeroCrossChecks) {
  Gf2Matrix p = fixtures::three_bit_parity();
  CpcCode c = from_classical(p, p, Gf2Matrix(3, 3));
  EXPECT_TRUE(validate(c).empty());
  EXPECT_THROW(from_classical(p, Gf2Matrix(2, 3), Gf2Matrix(3, 3)), std::invalid_argument);
}

TEST(CodeModel, GeneralizeExampleCode) {
  GeneralCpcCode g = generalize(fixtures::code_11_3_3());
  EXPECT_EQ(g.k, 3u);
  EXPECT_EQ(g.n_c, 8u);
  EXPECT_EQ(g.mbs, m({"10100000", "11000000", "01100000"}));
  EXPECT_EQ(g.mps, m({"00001010", "00001100", "00000110"}));
  EXPECT_EQ(g.mcs, m({"00000011", "00001001", "00000101", "00001111", "00000000", "00000000", "00000000",
                      "00000000"}));
}

TEST(CodeModel, GeneralizeEmptyAndHamming) {
  CpcCode empty = make_code(Gf2Matrix(2, 0), Gf2Matrix(2, 0), Gf2Matrix(0, 0));
  GeneralCpcCode g = generalize(empty);
  EXPECT_EQ(g.n_c, 0u);
  EXPECT_EQ(g.k, 2u);
  CpcCode h = fixtures::code_12_4_3();
  GeneralCpcCode gh = generalize(h);
  EXPECT_EQ(gh.n_c, 8u);
  for (size_t d = 0; d < 4; d++) {
    for (size_t c = 0; c < 8; c++) {
      EXPECT_EQ(gh.mbs.get(d, c), c < 4 && h.mb.get(d, c));
      EXPECT_EQ(gh.mps.get(d, c), c >= 4 && h.mp.get(d, c - 4));
    }
  }
  for (size_t i = 0; i < 8; i++) {
    for (size_t j = 0; j < 8; j++) {
      EXPECT_EQ(gh.mcs.get(i, j), i < 4 && j >= 4 && h.mc.get(i, j - 4));
    }
  }
}

TEST(CodeModel, Labels) {
  EXPECT_EQ(qubit_labels(fixtures::code_6_3_1()), (std::vector<std::string>{"d1", "d2", "d3", "b1", "b2", "b3"}));
  auto general = qubit_labels(fixtures::code_10_3_3());
  EXPECT_EQ(general.front(), "d1");
  EXPECT_EQ(general.back(), "c7");
  EXPECT_EQ(qubit_count(AnyCode(fixtures::code_12_4_3())), 12u);
  EXPECT_EQ(data_count(AnyCode(fixtures::code_10_3_3())), 3u);
}

}  // namespace
}  // namespace cpc
