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


#include "cpc/dynamics.h"

#include <gtest/gtest.h>

#include <cmath>

#include "cpc/fixtures.h"

namespace cpc {
namespace {

CpcCode unprotected_qubit() {
  return make_code(Gf2Matrix(1, 0), Gf2Matrix(1, 0), Gf2Matrix(0, 0));
}

SimConfig small_config(SimEngine engine) {
  SimConfig c;
  c.cycle_rate = 10;
  c.t_max = 20;
  c.samples = 11;
  c.trials = 50;
  c.haar_states = 4;
  c.seed = 5;
  c.engine = engine;
  return c;
}

TEST(Dynamics, CycleFlipProbability) {
  EXPECT_NEAR(cycle_flip_probability(0.007, 100), 1 - std::exp(-0.00007), 1e-15);
  EXPECT_EQ(cycle_flip_probability(0, 100), 0);
}

TEST(Dynamics, ZeroRatesKeepEverythingPerfect) {
  for (SimEngine engine : {SimEngine::kPauliFrame, SimEngine::kStatevector}) {
    SimResult r = simulate(fixtures::code_6_3_1(), ErrorModel{0, 0}, small_config(engine));
    ASSERT_EQ(r.points.size(), 11u);
    for (const SamplePoint &p : r.points) {
      EXPECT_EQ(p.f0, 1);
      EXPECT_EQ(p.fplus, 1);
      EXPECT_NEAR(p.frand, 1, 1e-12);
    }
    EXPECT_EQ(r.error_cycles, 0u);
  }
}

TEST(Dynamics, BitFlipCodeKeepsPlusStates) {
  for (SimEngine engine : {SimEngine::kPauliFrame, SimEngine::kStatevector}) {
    SimConfig config = small_config(engine);
    config.cycle_rate = 100;
    config.t_max = 200;
    SimResult r = simulate(fixtures::code_6_3_1(), ErrorModel{0.05, 0}, config);
    EXPECT_GT(r.error_cycles, 0u);
    for (const SamplePoint &p : r.points) {
      EXPECT_NEAR(p.fplus, 1, 1e-9);
    }
  }
}

TEST(Dynamics, SampleTimesAreEvenlySpaced) {
  SimResult r = simulate(fixtures::code_6_3_1(), ErrorModel{0, 0}, small_config(SimEngine::kPauliFrame));
  for (size_t s = 0; s < r.points.size(); s++) {
    EXPECT_NEAR(r.points[s].time, 2.0 * s, 1e-12);
  }
}

TEST(Dynamics, UnprotectedQubitMatchesAnalyticDecay) {
  // Independent flips at rate eps: P(even flips) = (1 + exp(-2 eps t)) / 2.
  // A Haar qubit under X keeps overlap 1/3 on average.
  const double eps = 0.007;
  SimConfig config;
  config.cycle_rate = 100;
  config.t_max = 300;
  config.samples = 31;
  config.trials = 4000;
  config.haar_states = 20;
  SimResult r = simulate(unprotected_qubit(), ErrorModel{eps, 0}, config);
  std::vector<double> ts, f0;
  for (const SamplePoint &p : r.points) {
    double even = 0.5 * (1 + std::exp(-2 * eps * p.time));
    EXPECT_NEAR(p.f0, even, 5 * p.f0_err + 1e-12);
    EXPECT_NEAR(p.frand, even + (1 - even) / 3, 5 * p.frand_err + 1e-3);
    EXPECT_EQ(p.fplus, 1);
    ts.push_back(p.time);
    f0.push_back(p.f0);
  }
  HalfLifeFit fit = fit_half_life(ts, f0);
  EXPECT_NEAR(fit.lambda_half, std::log(2.0) / (2 * eps), 0.1 * std::log(2.0) / (2 * eps));
  EXPECT_NEAR(fit.f_inf, 0.5, 0.05);
}

TEST(Dynamics, EnginesAgreeStatistically) {
  for (const AnyCode &code : {AnyCode(fixtures::code_6_3_1()), AnyCode(fixtures::code_10_3_3())}) {
    SimConfig config = small_config(SimEngine::kPauliFrame);
    config.trials = 300;
    config.samples = 5;
    ErrorModel model{0.3, 0.15};
    SimResult frame = simulate(code, model, config);
    config.engine = SimEngine::kStatevector;
    SimResult sv = simulate(code, model, config);
    for (size_t s = 0; s < frame.points.size(); s++) {
      const SamplePoint &a = frame.points[s], &b = sv.points[s];
      auto tol = [](double e1, double e2) { return 5 * std::hypot(e1, e2) + 1e-9; };
      EXPECT_NEAR(a.f0, b.f0, tol(a.f0_err, b.f0_err)) << s;
      EXPECT_NEAR(a.fplus, b.fplus, tol(a.fplus_err, b.fplus_err)) << s;
      EXPECT_NEAR(a.frand, b.frand, tol(a.frand_err, b.frand_err)) << s;
    }
  }
}

TEST(Dynamics, FidelitiesStayInUnitInterval) {
  SimConfig config = small_config(SimEngine::kStatevector);
  SimResult r = simulate(fixtures::code_11_3_1(), ErrorModel{0.5, 0.5}, config);
  EXPECT_GT(r.uncorrectable_cycles, 0u);
  for (const SamplePoint &p : r.points) {
    for (double f : {p.f0, p.fplus, p.frand}) {
      EXPECT_GE(f, -1e-12);
      EXPECT_LE(f, 1 + 1e-12);
    }
  }
}

TEST(Dynamics, ReproducibleAcrossRunsAndThreads) {
  for (SimEngine engine : {SimEngine::kPauliFrame, SimEngine::kStatevector}) {
    SimConfig config = small_config(engine);
    ErrorModel model{0.2, 0.1};
    std::string a = simulate(fixtures::code_6_3_1(), model, config).to_csv();
    std::string b = simulate(fixtures::code_6_3_1(), model, config).to_csv();
    config.threads = 3;
    std::string c = simulate(fixtures::code_6_3_1(), model, config).to_csv();
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
    config.seed = 6;
    EXPECT_NE(a, simulate(fixtures::code_6_3_1(), model, config).to_csv());
  }
}

TEST(Dynamics, RejectsBadConfigs) {
  SimConfig config = small_config(SimEngine::kStatevector);
  CpcCode fifteen = make_code(Gf2Matrix(3, 6), Gf2Matrix(3, 6), Gf2Matrix(6, 6));
  EXPECT_THROW(simulate(fifteen, ErrorModel{0.1, 0}, config), std::invalid_argument);
  config.engine = SimEngine::kPauliFrame;
  config.cycle_rate = 0;
  EXPECT_THROW(simulate(fixtures::code_6_3_1(), ErrorModel{0.1, 0}, config), std::invalid_argument);
  config.cycle_rate = 10;
  EXPECT_THROW(simulate(fixtures::code_6_3_1(), ErrorModel{-1, 0}, config), std::invalid_argument);
}

TEST(Dynamics, CsvRoundTrip) {
  SimResult r = simulate(fixtures::code_6_3_1(), ErrorModel{0.2, 0.1}, small_config(SimEngine::kPauliFrame));
  std::string csv = r.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "time_s,F0,F0_err,Fplus,Fplus_err,Frand,Frand_err");
  std::vector<SamplePoint> back = parse_sim_csv(csv);
  ASSERT_EQ(back.size(), r.points.size());
  for (size_t i = 0; i < back.size(); i++) {
    EXPECT_NEAR(back[i].f0, r.points[i].f0, 1e-11);
    EXPECT_NEAR(back[i].frand_err, r.points[i].frand_err, 1e-11);
  }
  EXPECT_THROW(parse_sim_csv("a,b\n"), std::invalid_argument);
  EXPECT_THROW(parse_sim_csv("time_s,F0,F0_err,Fplus,Fplus_err,Frand,Frand_err\n1,2\n"), std::invalid_argument);
}

TEST(Fit, RecoversSyntheticExponential) {
  std::vector<double> ts, fs;
  for (int i = 0; i <= 40; i++) {
    double t = 5.0 * i;
    ts.push_back(t);
    fs.push_back(0.3 + 0.7 * std::exp(-std::log(2.0) * t / 50));
  }
  HalfLifeFit fit = fit_half_life(ts, fs);
  EXPECT_NEAR(fit.lambda_half, 50, 0.5);
  EXPECT_NEAR(fit.f_inf, 0.3, 1e-3);
  EXPECT_FALSE(fit.degenerate);
  EXPECT_LT(fit.residual, 1e-10);
}

TEST(Fit, ClampsAsymptoteToUnitInterval) {
  std::vector<double> ts, fs;
  for (int i = 0; i <= 20; i++) {
    ts.push_back(i);
    fs.push_back(-0.2 + 1.2 * std::exp(-0.3 * i));
  }
  HalfLifeFit fit = fit_half_life(ts, fs);
  EXPECT_GE(fit.f_inf, 0);
  EXPECT_LE(fit.f_inf, 1);
}

TEST(Fit, DegenerateAndShortSeries) {
  HalfLifeFit flat = fit_half_life({0, 1, 2, 3}, {1, 1, 1, 1});
  EXPECT_TRUE(flat.degenerate);
  EXPECT_TRUE(std::isinf(flat.lambda_half));
  EXPECT_THROW(fit_half_life({0, 1, 2}, {1, 0.9, 0.8}), std::invalid_argument);
  EXPECT_THROW(fit_half_life({0, 1, 2, 3}, {1, 0.9, 0.8}), std::invalid_argument);
}

TEST(Coherent, BitFlipCodeSeries) {
  for (double eps : {0.01, 0.005}) {
    CoherentResult r = coherent_fidelity_631(eps);
    double e2 = eps * eps, e4 = e2 * e2;
    EXPECT_NEAR((1 - r.fidelity) / e4, 15, 0.3);
    EXPECT_NEAR(r.syndrome_probabilities[0] / (1 - 6 * e2 + 17 * e4), 1, 0.02);
    EXPECT_NEAR(r.syndrome_probabilities[7] / (3 * e4), 1, 0.02);
    double total = 0;
    for (double p : r.syndrome_probabilities) {
      total += p;
    }
    EXPECT_NEAR(total, 1, 1e-12);
  }
}

TEST(Coherent, ZeroAmplitudeIsPerfect) {
  CoherentResult r = coherent_fidelity(fixtures::code_11_3_3(), 0);
  EXPECT_NEAR(r.fidelity, 1, 1e-12);
  EXPECT_NEAR(r.syndrome_probabilities[0], 1, 1e-12);
}

TEST(Coherent, CorrectingCodeSuppressesLeadingOrder) {
  // Single X rotations are corrected, so the loss starts beyond eps^2.
  double eps = 0.01;
  CoherentResult r = coherent_fidelity(fixtures::code_11_3_3(), eps);
  EXPECT_LT(1 - r.fidelity, 0.1 * eps * eps);
}

}  // namespace
}  // namespace cpc
