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

#ifndef CPC_DYNAMICS_H_
#define CPC_DYNAMICS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cpc/code.h"
#include "cpc/statevector.h"

namespace cpc {

/// Stochastic Pauli noise rates in 1/s, applied independently per qubit.
struct ErrorModel {
  double eps_bit = 0;
  double eps_phase = 0;
};

enum class SimEngine {
  /// Tracks the accumulated data Pauli. Exact for Pauli noise with Clifford
  /// cycles and perfect measurement.
  kPauliFrame,
  /// Full statevector per initial state with Born-rule check measurement.
  /// Limited to 14 qubits.
  kStatevector,
};

constexpr size_t kMaxSimulatedStatevectorQubits = 14;

struct SimConfig {
  double cycle_rate = 100;  // cycles per second
  double t_max = 1000;      // seconds
  size_t samples = 51;      // time points, evenly spaced over [0, t_max]
  size_t trials = 100;
  size_t haar_states = 20;
  uint64_t seed = 1;
  size_t threads = 1;
  SimEngine engine = SimEngine::kPauliFrame;
};

struct SamplePoint {
  double time = 0;
  double f0 = 0, f0_err = 0;
  double fplus = 0, fplus_err = 0;
  double frand = 0, frand_err = 0;
};

struct SimResult {
  std::vector<SamplePoint> points;
  /// Cycles whose syndrome had no decode-table entry, summed over trials.
  uint64_t uncorrectable_cycles = 0;
  /// Cycles with at least one error, summed over trials.
  uint64_t error_cycles = 0;

  /// Columns time_s,F0,F0_err,Fplus,Fplus_err,Frand,Frand_err.
  std::string to_csv() const;
};

/// Per-cycle flip probabilities 1 - exp(-eps / r).
double cycle_flip_probability(double eps, double cycle_rate);

/// Runs encode / noise / decode / measure / correct cycles. F0 and Fplus are
/// per-data-qubit fidelities for |0> and |+> inputs, averaged over the data
/// qubits; Frand is <psi|rho|psi> averaged over Haar-random data states.
/// Error bars are standard errors over trials.
SimResult simulate(const AnyCode &code, const ErrorModel &model, const SimConfig &config);

/// Parses the CSV written by SimResult::to_csv.
std::vector<SamplePoint> parse_sim_csv(std::string_view text);

struct HalfLifeFit {
  double lambda_half = 0;
  double f_inf = 0;
  /// Sum of squared residuals.
  double residual = 0;
  /// Set for constant series; lambda_half is then infinite.
  bool degenerate = false;
};

/// Least-squares fit of F(t) = F_inf + (1 - F_inf) exp(-ln2 t / lambda) with
/// F_inf in [0, 1]. Needs at least 4 points.
HalfLifeFit fit_half_life(const std::vector<double> &times, const std::vector<double> &values);

struct CoherentResult {
  double fidelity = 0;
  /// Indexed by syndrome bits (bit i = check i).
  std::vector<double> syndrome_probabilities;
};

/// One cycle with the coherent error prod_j (cos eps I + i sin eps X_j) on all
/// qubits, decoded with decode_table_best_effort. `data_state` has 2^k
/// amplitudes; empty means |0...0>.
CoherentResult coherent_fidelity(const AnyCode &code, double epsilon, const std::vector<Amplitude> &data_state = {});
/// The bit-flip code on three data qubits with input |000>.
CoherentResult coherent_fidelity_631(double epsilon);

}  // namespace cpc

#endif  // CPC_DYNAMICS_H_
