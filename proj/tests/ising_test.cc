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


#include "cpc/ising.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cpc/fixtures.h"
#include "cpc/propagation.h"

namespace cpc {
namespace {

std::vector<uint8_t> measurement_bits(uint64_t mask, size_t count) {
  std::vector<uint8_t> out(count);
  for (size_t i = 0; i < count; i++) {
    out[i] = (mask >> i) & 1;
  }
  return out;
}

// Brute-force minimum of the energy written out from its definition.
double brute_ground_energy(const ClassicalCode &code, const Priors &priors, const std::vector<uint8_t> &meas) {
  double best = INFINITY;
  for (uint64_t mask = 0; mask < (uint64_t{1} << code.bit_count); mask++) {
    double e = 0;
    for (size_t h = 0; h < code.bit_count; h++) {
      double s = ((mask >> h) & 1) ? -1 : 1;
      e += std::log(priors.bit[h] / (1 - priors.bit[h])) * s;
    }
    for (size_t c = 0; c < code.checks.size(); c++) {
      double prod = 1;
      for (size_t b : code.checks[c].bits) {
        prod *= ((mask >> b) & 1) ? -1 : 1;
      }
      double l = std::log(priors.check[c] / (1 - priors.check[c]));
      e += (meas[c] ? -l : l) * prod;
    }
    best = std::min(best, e);
  }
  return best;
}

ClassicalCode random_classical(std::mt19937_64 &rng) {
  ClassicalCode code;
  code.bit_count = 1 + rng() % 6;
  for (size_t b = 0; b < code.bit_count; b++) {
    code.bit_labels.push_back("x" + std::to_string(b + 1));
  }
  size_t checks = 1 + rng() % 5;
  for (size_t c = 0; c < checks; c++) {
    ClassicalCode::Check check{"s" + std::to_string(c + 1), {}};
    for (size_t b = 0; b < code.bit_count; b++) {
      if (rng() & 1) {
        check.bits.push_back(b);
      }
    }
    code.checks.push_back(check);
  }
  return code;
}

TEST(Ising, Coefficients) {
  ClassicalCode code = effective_codes(fixtures::code_6_3_1()).bit;
  IsingProblem p = ising_problem(code, Priors::uniform(code, 0.1), {0, 0, 0});
  EXPECT_NEAR(p.fields[0], std::log(1.0 / 9.0), 1e-12);
  EXPECT_NEAR(p.fields[0], -2.1972, 1e-4);
  EXPECT_NEAR(p.checks[0].coefficient, std::log(1.0 / 9.0), 1e-12);
  IsingProblem flagged = ising_problem(code, Priors::uniform(code, 0.1), {1, 0, 0});
  EXPECT_NEAR(flagged.checks[0].coefficient, -std::log(1.0 / 9.0), 1e-12);
}

TEST(Ising, QuietSyndromeMeansNoErrors) {
  ClassicalCode code = effective_codes(fixtures::code_11_3_3()).bit;
  IsingGroundState g = ising_ground_state(ising_problem(code, Priors::uniform(code, 0.05), {0, 0, 0, 0}));
  for (int s : g.spins) {
    EXPECT_EQ(s, 1);
  }
  MlDecodeResult r = ml_decode_exhaustive(code, {0, 0, 0, 0}, Priors::uniform(code, 0.05));
  EXPECT_TRUE(r.bit_errors.empty());
  EXPECT_TRUE(r.check_errors.empty());
}

TEST(Ising, BitFlipCodeSyndrome011FlipsThirdBit) {
  ClassicalCode code = effective_codes(fixtures::code_6_3_1()).bit;
  std::vector<uint8_t> meas = {0, 1, 1};
  IsingGroundState g = ising_ground_state(ising_problem(code, Priors::uniform(code, 0.1), meas));
  EXPECT_EQ(g.spins, (std::vector<int>{1, 1, -1}));
  EXPECT_EQ(ising_decode(code, meas, Priors::uniform(code, 0.1)).bit_errors, (std::vector<size_t>{2}));
}

TEST(Ising, CheckOnlyExplanation) {
  // One bit watched by two checks; a lone flag is cheaper as a check error.
  ClassicalCode code;
  code.bit_count = 1;
  code.bit_labels = {"x1"};
  code.checks = {{"s1", {0}}, {"s2", {0}}};
  Priors priors = Priors::uniform(code, 0.05);
  for (const MlDecodeResult &r : {ml_decode_exhaustive(code, {1, 0}, priors), ising_decode(code, {1, 0}, priors)}) {
    EXPECT_TRUE(r.bit_errors.empty());
    EXPECT_EQ(r.check_errors, (std::vector<size_t>{0}));
  }
}

TEST(Ising, GroundEnergyMatchesBruteForce) {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> prob(0.01, 0.3);
  for (int trial = 0; trial < 200; trial++) {
    ClassicalCode code = random_classical(rng);
    Priors priors;
    for (size_t b = 0; b < code.bit_count; b++) {
      priors.bit.push_back(prob(rng));
    }
    for (size_t c = 0; c < code.checks.size(); c++) {
      priors.check.push_back(prob(rng));
    }
    auto meas = measurement_bits(rng(), code.checks.size());
    IsingProblem problem = ising_problem(code, priors, meas);
    IsingGroundState g = ising_ground_state(problem);
    EXPECT_NEAR(g.energy, brute_ground_energy(code, priors, meas), 1e-9);
    EXPECT_NEAR(problem.energy(g.spins), g.energy, 1e-12);
  }
}

TEST(Ising, AgreesWithExhaustiveMlOnRandomCodes) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 200; trial++) {
    ClassicalCode code = random_classical(rng);
    Priors priors = Priors::uniform(code, 0.05);
    auto meas = measurement_bits(rng(), code.checks.size());
    MlDecodeResult a = ising_decode(code, meas, priors);
    MlDecodeResult b = ml_decode_exhaustive(code, meas, priors);
    EXPECT_EQ(a.bit_errors, b.bit_errors);
    EXPECT_EQ(a.check_errors, b.check_errors);
    EXPECT_NEAR(a.log_likelihood, b.log_likelihood, 1e-9);
  }
}

TEST(Ising, AgreesWithExhaustiveMlOnExampleCodes) {
  EffectiveCodes e = effective_codes(fixtures::code_11_3_3());
  for (const ClassicalCode *code : {&e.bit, &e.phase}) {
    Priors priors = Priors::uniform(*code, 0.05);
    for (uint64_t s = 0; s < (uint64_t{1} << code->checks.size()); s++) {
      auto meas = measurement_bits(s, code->checks.size());
      MlDecodeResult a = ising_decode(*code, meas, priors);
      MlDecodeResult b = ml_decode_exhaustive(*code, meas, priors);
      EXPECT_EQ(a.bit_errors, b.bit_errors) << s;
      EXPECT_EQ(a.check_errors, b.check_errors) << s;
    }
  }
}

TEST(Ising, RejectsBadInputs) {
  ClassicalCode code = effective_codes(fixtures::code_6_3_1()).bit;
  EXPECT_THROW(ising_problem(code, Priors::uniform(code, 0.1), {0, 1}), std::invalid_argument);
  EXPECT_THROW(ising_problem(code, Priors::uniform(code, 0.0), {0, 0, 0}), std::invalid_argument);
}

}  // namespace
}  // namespace cpc
