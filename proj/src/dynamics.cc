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

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <locale>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <utility>

#include "cpc/circuit.h"
#include "cpc/decoding.h"
#include "cpc/fixtures.h"
#include "cpc/rng.h"

namespace cpc {

namespace {

constexpr uint64_t kErrorLane = 0;
constexpr uint64_t kHaarLane = 1;
constexpr uint64_t kMeasureLane = 2;

struct ErrorEvent {
  uint64_t cycle;
  uint32_t qubit;
  uint8_t kind;  // 0 = X, 1 = Z

  bool operator<(const ErrorEvent &o) const { return std::tie(cycle, qubit, kind) < std::tie(o.cycle, o.qubit, o.kind); }
};

// Error-free cycles act as the identity, so only cycles containing at least
// one error are materialized. Gaps between errors are geometric.
std::vector<ErrorEvent> sample_events(size_t num_qubits, double px, double pz, uint64_t cycles,
                                      std::mt19937_64 &rng) {
  std::vector<ErrorEvent> events;
  for (size_t q = 0; q < num_qubits; q++) {
    for (uint8_t kind = 0; kind < 2; kind++) {
      double p = kind == 0 ? px : pz;
      if (p <= 0) {
        continue;
      }
      std::geometric_distribution<uint64_t> gap(std::min(p, 1.0));
      uint64_t c = gap(rng);
      while (c < cycles) {
        events.push_back({c, uint32_t(q), kind});
        c += 1 + gap(rng);
      }
    }
  }
  std::sort(events.begin(), events.end());
  return events;
}

struct Accumulator {
  std::vector<double> f0, fplus, frand;  // trial-major: [trial * samples + s]
};

struct TrialCounters {
  uint64_t uncorrectable = 0;
  uint64_t error_cycles = 0;
};

struct Correction {
  uint64_t x = 0;
  uint64_t z = 0;
  bool uncorrectable = false;
};

class Decoder {
 public:
  explicit Decoder(DecodeTable table) : table_(std::move(table)) {
    if (table_.check_count <= 20) {
      dense_.assign(size_t{1} << table_.check_count, Correction{0, 0, true});
      for (const auto &[s, entry] : table_.entries) {
        dense_[s] = {entry.correction.xs(), entry.correction.zs(), false};
      }
    }
  }

  Correction lookup(Syndrome s) const {
    if (!dense_.empty()) {
      return dense_[s];
    }
    DecodeEntry e = decode(table_, s);
    return {e.correction.xs(), e.correction.zs(), e.cls == DecodeClass::kUncorrectable};
  }

 private:
  DecodeTable table_;
  std::vector<Correction> dense_;
};

// Syndrome and data residual of a single X or Z error.
struct Image {
  Syndrome s;
  uint64_t x, z;
};

struct Setup {
  explicit Setup(const AnyCode &c) : code(c) {}

  const AnyCode &code;
  size_t n = 0;
  size_t k = 0;
  size_t m = 0;
  double px = 0;
  double pz = 0;
  std::vector<uint64_t> sample_cycles;
  std::optional<Decoder> decoder;
  // Indexed by 2 * qubit + kind.
  std::vector<Image> images;
};

std::vector<std::vector<Amplitude>> trial_haar_states(const SimConfig &config, size_t k, uint64_t trial) {
  std::mt19937_64 rng = stream_rng(config.seed, trial, kHaarLane);
  std::vector<std::vector<Amplitude>> states;
  for (size_t h = 0; h < config.haar_states; h++) {
    states.push_back(haar_state(size_t{1} << k, rng));
  }
  return states;
}

// |<psi| X^x Z^z |psi>|^2.
double pauli_overlap(const std::vector<Amplitude> &psi, uint64_t x, uint64_t z) {
  Amplitude total(0);
  for (size_t i = 0; i < psi.size(); i++) {
    size_t j = i ^ x;
    double sign = (std::popcount(j & z) & 1) ? -1.0 : 1.0;
    total += std::conj(psi[i]) * psi[j] * sign;
  }
  return std::norm(total);
}

void run_frame_trial(const Setup &setup, const SimConfig &config, uint64_t trial, double *f0, double *fplus,
                     double *frand, TrialCounters &counters) {
  const std::vector<Image> &images = setup.images;
  const Decoder &decoder = *setup.decoder;
  std::mt19937_64 rng = stream_rng(config.seed, trial, kErrorLane);
  std::vector<ErrorEvent> events = sample_events(setup.n, setup.px, setup.pz, setup.sample_cycles.back(), rng);
  std::vector<std::vector<Amplitude>> haar = trial_haar_states(config, setup.k, trial);

  uint64_t dx = 0, dz = 0;
  size_t idx = 0;
  double cached_frand = 1;
  bool frand_valid = true;
  for (size_t s = 0; s < setup.sample_cycles.size(); s++) {
    while (idx < events.size() && events[idx].cycle < setup.sample_cycles[s]) {
      uint64_t cycle = events[idx].cycle;
      Syndrome syn = 0;
      uint64_t rx = 0, rz = 0;
      while (idx < events.size() && events[idx].cycle == cycle) {
        const Image &im = images[2 * events[idx].qubit + events[idx].kind];
        syn ^= im.s;
        rx ^= im.x;
        rz ^= im.z;
        idx++;
      }
      Correction c = decoder.lookup(syn);
      dx ^= rx ^ c.x;
      dz ^= rz ^ c.z;
      counters.error_cycles++;
      counters.uncorrectable += c.uncorrectable;
      frand_valid = false;
    }
    if (setup.k == 0) {
      f0[s] = fplus[s] = frand[s] = 1;
      continue;
    }
    f0[s] = 1 - double(std::popcount(dx)) / setup.k;
    fplus[s] = 1 - double(std::popcount(dz)) / setup.k;
    if (!frand_valid) {
      if (dx == 0 && dz == 0) {
        cached_frand = 1;
      } else {
        double sum = 0;
        for (const auto &psi : haar) {
          sum += pauli_overlap(psi, dx, dz);
        }
        cached_frand = haar.empty() ? 1 : sum / haar.size();
      }
      frand_valid = true;
    }
    frand[s] = cached_frand;
  }
}

// Reference product state of the check register: |0> for Z-basis checks and
// |+> for X-basis checks.
StateVector with_check_refs(const std::vector<Amplitude> &data, const Setup &setup,
                            const std::vector<bool> &x_basis) {
  StateVector checks(setup.m);
  for (size_t i = 0; i < setup.m; i++) {
    if (x_basis[i]) {
      checks.apply_h(i);
    }
  }
  return tensor(StateVector(data), checks);
}

void run_statevector_trial(const Setup &setup, const SimConfig &config, uint64_t trial, double *f0, double *fplus,
                           double *frand, TrialCounters &counters) {
  std::vector<bool> x_basis(setup.m, false);
  if (const auto *split = std::get_if<CpcCode>(&setup.code)) {
    for (size_t p = 0; p < split->n_p; p++) {
      x_basis[split->n_b + p] = true;
    }
  }
  Circuit enc = encode_circuit(setup.code);
  Circuit dec = enc.reversed();
  const Decoder &decoder = *setup.decoder;
  std::mt19937_64 rng = stream_rng(config.seed, trial, kErrorLane);
  std::vector<ErrorEvent> events = sample_events(setup.n, setup.px, setup.pz, setup.sample_cycles.back(), rng);
  std::vector<std::vector<Amplitude>> haar = trial_haar_states(config, setup.k, trial);
  std::mt19937_64 meas = stream_rng(config.seed, trial, kMeasureLane);

  size_t dim = size_t{1} << setup.k;
  std::vector<Amplitude> zeros(dim, 0), pluses(dim, 1 / std::sqrt(double(dim)));
  zeros[0] = 1;
  std::vector<std::vector<Amplitude>> inputs = {zeros, pluses};
  inputs.insert(inputs.end(), haar.begin(), haar.end());
  std::vector<StateVector> states;
  std::vector<StateVector> refs;
  for (const auto &in : inputs) {
    states.push_back(with_check_refs(in, setup, x_basis));
    refs.push_back(states.back());
  }

  size_t idx = 0;
  for (size_t s = 0; s < setup.sample_cycles.size(); s++) {
    while (idx < events.size() && events[idx].cycle < setup.sample_cycles[s]) {
      uint64_t cycle = events[idx].cycle;
      size_t begin = idx;
      while (idx < events.size() && events[idx].cycle == cycle) {
        idx++;
      }
      counters.error_cycles++;
      for (size_t which = 0; which < states.size(); which++) {
        StateVector &psi = states[which];
        psi.apply_circuit(enc);
        for (size_t e = begin; e < idx; e++) {
          if (events[e].kind == 0) {
            psi.apply_x(events[e].qubit);
          } else {
            psi.apply_z(events[e].qubit);
          }
        }
        psi.apply_circuit(dec);
        Syndrome syn = 0;
        for (size_t i = 0; i < setup.m; i++) {
          size_t q = setup.k + i;
          if (x_basis[i]) {
            psi.apply_h(q);
          }
          if (psi.measure(q, meas)) {
            syn |= Syndrome{1} << i;
            psi.apply_x(q);
          }
          if (x_basis[i]) {
            psi.apply_h(q);
          }
        }
        Correction c = decoder.lookup(syn);
        if (which == 0) {
          counters.uncorrectable += c.uncorrectable;
        }
        for (size_t d = 0; d < setup.k; d++) {
          if ((c.x >> d) & 1) {
            psi.apply_x(d);
          }
          if ((c.z >> d) & 1) {
            psi.apply_z(d);
          }
        }
        if (std::abs(psi.norm() - 1) > 1e-10) {
          throw std::logic_error("statevector norm drifted beyond 1e-10");
        }
      }
    }
    if (setup.k == 0) {
      f0[s] = fplus[s] = frand[s] = 1;
      continue;
    }
    double a0 = 0, ap = 0;
    for (size_t d = 0; d < setup.k; d++) {
      a0 += 1 - states[0].probability_one(d);
      StateVector copy = states[1];
      copy.apply_h(d);
      ap += 1 - copy.probability_one(d);
    }
    f0[s] = a0 / setup.k;
    fplus[s] = ap / setup.k;
    double sum = 0;
    for (size_t h = 2; h < states.size(); h++) {
      sum += std::norm(refs[h].inner(states[h]));
    }
    frand[s] = haar.empty() ? 1 : sum / haar.size();
  }
}

void mean_and_error(const std::vector<double> &data, size_t trials, size_t samples, size_t s, double &mean,
                    double &err) {
  double sum = 0;
  for (size_t t = 0; t < trials; t++) {
    sum += data[t * samples + s];
  }
  mean = sum / trials;
  if (trials < 2) {
    err = 0;
    return;
  }
  double sq = 0;
  for (size_t t = 0; t < trials; t++) {
    double d = data[t * samples + s] - mean;
    sq += d * d;
  }
  err = std::sqrt(sq / (trials - 1) / trials);
}

}  // namespace

double cycle_flip_probability(double eps, double cycle_rate) {
  return -std::expm1(-eps / cycle_rate);
}

SimResult simulate(const AnyCode &code, const ErrorModel &model, const SimConfig &config) {
  auto violations = validate(code);
  if (!violations.empty()) {
    throw std::invalid_argument("simulate: invalid code: " + violations.front());
  }
  if (!(config.cycle_rate > 0) || config.trials < 1 || config.samples < 1 || !(config.t_max >= 0)) {
    throw std::invalid_argument("simulate: need cycle_rate > 0, trials >= 1, samples >= 1, t_max >= 0");
  }
  if (!(model.eps_bit >= 0) || !(model.eps_phase >= 0)) {
    throw std::invalid_argument("simulate: error rates must be non-negative");
  }
  Setup setup(code);
  setup.n = qubit_count(code);
  setup.k = data_count(code);
  setup.m = check_count(code);
  if (config.engine == SimEngine::kStatevector && setup.n > kMaxSimulatedStatevectorQubits) {
    throw std::invalid_argument("simulate: statevector engine supports at most 14 qubits");
  }
  if (setup.n > kMaxPauliQubits) {
    throw std::invalid_argument("simulate: at most 64 qubits");
  }
  if (setup.k > 16) {
    throw std::invalid_argument("simulate: at most 16 data qubits");
  }
  setup.px = cycle_flip_probability(model.eps_bit, config.cycle_rate);
  setup.pz = cycle_flip_probability(model.eps_phase, config.cycle_rate);
  for (size_t s = 0; s < config.samples; s++) {
    double t = config.samples == 1 ? config.t_max : config.t_max * double(s) / double(config.samples - 1);
    setup.sample_cycles.push_back(uint64_t(std::llround(t * config.cycle_rate)));
  }
  setup.decoder.emplace(decode_table_best_effort(code));
  if (config.engine == SimEngine::kPauliFrame) {
    for (size_t q = 0; q < setup.n; q++) {
      for (char kind : {'X', 'Z'}) {
        ErrorEffect e = propagate_error(code, PauliString::single(setup.n, q, kind));
        setup.images.push_back({e.syndrome, e.data_residual.xs(), e.data_residual.zs()});
      }
    }
  }

  size_t samples = config.samples;
  size_t trials = config.trials;
  Accumulator acc{std::vector<double>(trials * samples), std::vector<double>(trials * samples),
                  std::vector<double>(trials * samples)};
  std::vector<TrialCounters> counters(trials);
  size_t workers = std::max<size_t>(1, std::min(config.threads, trials));
  std::vector<std::exception_ptr> failures(workers);
  auto work = [&](size_t w) {
    try {
      for (size_t t = w; t < trials; t += workers) {
        double *f0 = &acc.f0[t * samples];
        double *fp = &acc.fplus[t * samples];
        double *fr = &acc.frand[t * samples];
        if (config.engine == SimEngine::kPauliFrame) {
          run_frame_trial(setup, config, t, f0, fp, fr, counters[t]);
        } else {
          run_statevector_trial(setup, config, t, f0, fp, fr, counters[t]);
        }
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; w++) {
      pool.emplace_back(work, w);
    }
    for (auto &th : pool) {
      th.join();
    }
  }
  for (auto &f : failures) {
    if (f) {
      std::rethrow_exception(f);
    }
  }

  SimResult result;
  for (size_t s = 0; s < samples; s++) {
    SamplePoint p;
    p.time = double(setup.sample_cycles[s]) / config.cycle_rate;
    mean_and_error(acc.f0, trials, samples, s, p.f0, p.f0_err);
    mean_and_error(acc.fplus, trials, samples, s, p.fplus, p.fplus_err);
    mean_and_error(acc.frand, trials, samples, s, p.frand, p.frand_err);
    result.points.push_back(p);
  }
  for (const auto &c : counters) {
    result.uncorrectable_cycles += c.uncorrectable;
    result.error_cycles += c.error_cycles;
  }
  return result;
}

std::string SimResult::to_csv() const {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.precision(12);
  out << "time_s,F0,F0_err,Fplus,Fplus_err,Frand,Frand_err\n";
  for (const SamplePoint &p : points) {
    out << p.time << ',' << p.f0 << ',' << p.f0_err << ',' << p.fplus << ',' << p.fplus_err << ',' << p.frand << ','
        << p.frand_err << '\n';
  }
  return out.str();
}

std::vector<SamplePoint> parse_sim_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  in.imbue(std::locale::classic());
  std::string line;
  if (!std::getline(in, line) || line.rfind("time_s,F0,F0_err,Fplus,Fplus_err,Frand,Frand_err", 0) != 0) {
    throw std::invalid_argument("simulation CSV: missing or unexpected header");
  }
  std::vector<SamplePoint> points;
  size_t number = 1;
  while (std::getline(in, line)) {
    number++;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    std::istringstream fields(line);
    fields.imbue(std::locale::classic());
    SamplePoint p;
    double *slots[] = {&p.time, &p.f0, &p.f0_err, &p.fplus, &p.fplus_err, &p.frand, &p.frand_err};
    for (size_t i = 0; i < 7; i++) {
      char sep = 0;
      if ((i > 0 && !(fields >> sep)) || (i > 0 && sep != ',') || !(fields >> *slots[i])) {
        throw std::invalid_argument("simulation CSV: malformed row at line " + std::to_string(number));
      }
    }
    points.push_back(p);
  }
  return points;
}

HalfLifeFit fit_half_life(const std::vector<double> &times, const std::vector<double> &values) {
  if (times.size() != values.size()) {
    throw std::invalid_argument("fit_half_life: times and values differ in length");
  }
  if (times.size() < 4) {
    throw std::invalid_argument("fit_half_life: need at least 4 points");
  }
  auto [vmin, vmax] = std::minmax_element(values.begin(), values.end());
  HalfLifeFit fit;
  if (*vmax - *vmin < 1e-12) {
    fit.degenerate = true;
    fit.lambda_half = std::numeric_limits<double>::infinity();
    fit.f_inf = *vmin;
    return fit;
  }
  auto [tmin, tmax] = std::minmax_element(times.begin(), times.end());
  double span = *tmax - *tmin;
  if (!(span > 0)) {
    throw std::invalid_argument("fit_half_life: times must span a positive interval");
  }
  const double ln2 = std::log(2.0);
  auto evaluate = [&](double log_lambda, double &f_inf) {
    double lambda = std::exp(log_lambda);
    double num = 0, den = 0;
    for (size_t i = 0; i < times.size(); i++) {
      double u = std::exp(-ln2 * times[i] / lambda);
      num += (values[i] - u) * (1 - u);
      den += (1 - u) * (1 - u);
    }
    f_inf = den > 0 ? std::clamp(num / den, 0.0, 1.0) : 0.0;
    double rss = 0;
    for (size_t i = 0; i < times.size(); i++) {
      double u = std::exp(-ln2 * times[i] / lambda);
      double r = values[i] - (f_inf + (1 - f_inf) * u);
      rss += r * r;
    }
    return rss;
  };
  const size_t grid = 801;
  double lo = std::log(span) - std::log(1e4);
  double hi = std::log(span) + std::log(1e4);
  double step = (hi - lo) / (grid - 1);
  size_t best = 0;
  double best_rss = std::numeric_limits<double>::infinity();
  for (size_t g = 0; g < grid; g++) {
    double f;
    double rss = evaluate(lo + step * g, f);
    if (rss < best_rss) {
      best_rss = rss;
      best = g;
    }
  }
  double a = lo + step * (best == 0 ? 0 : best - 1);
  double b = lo + step * std::min(best + 1, grid - 1);
  const double phi = (std::sqrt(5.0) - 1) / 2;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc, fd;
  double rc = evaluate(c, fc), rd = evaluate(d, fd);
  for (int it = 0; it < 200 && b - a > 1e-12; it++) {
    if (rc < rd) {
      b = d;
      d = c;
      rd = rc;
      c = b - phi * (b - a);
      rc = evaluate(c, fc);
    } else {
      a = c;
      c = d;
      rc = rd;
      d = a + phi * (b - a);
      rd = evaluate(d, fd);
    }
  }
  double x = (a + b) / 2;
  double f_inf;
  fit.residual = evaluate(x, f_inf);
  fit.f_inf = f_inf;
  fit.lambda_half = std::exp(x);
  if (best_rss < fit.residual) {
    fit.residual = evaluate(lo + step * best, fit.f_inf);
    fit.lambda_half = std::exp(lo + step * best);
  }
  return fit;
}

CoherentResult coherent_fidelity(const AnyCode &code, double epsilon, const std::vector<Amplitude> &data_state) {
  size_t n = qubit_count(code);
  size_t k = data_count(code);
  size_t m = check_count(code);
  if (n > kMaxSimulatedStatevectorQubits) {
    throw std::invalid_argument("coherent_fidelity: at most 14 qubits");
  }
  std::vector<Amplitude> data = data_state;
  if (data.empty()) {
    data.assign(size_t{1} << k, 0);
    data[0] = 1;
  }
  if (data.size() != (size_t{1} << k)) {
    throw std::invalid_argument("coherent_fidelity: data state must have 2^k amplitudes");
  }
  std::vector<bool> x_basis(m, false);
  if (const auto *split = std::get_if<CpcCode>(&code)) {
    for (size_t p = 0; p < split->n_p; p++) {
      x_basis[split->n_b + p] = true;
    }
  }
  StateVector checks(m);
  for (size_t i = 0; i < m; i++) {
    if (x_basis[i]) {
      checks.apply_h(i);
    }
  }
  StateVector psi = tensor(StateVector(data), checks);
  psi.normalize();
  StateVector target_data(data);
  target_data.normalize();

  Circuit enc = encode_circuit(code);
  psi.apply_circuit(enc);
  for (size_t q = 0; q < n; q++) {
    psi.apply_rx_phase(q, epsilon);
  }
  psi.apply_circuit(enc.reversed());
  for (size_t i = 0; i < m; i++) {
    if (x_basis[i]) {
      psi.apply_h(k + i);
    }
  }

  DecodeTable table = decode_table_best_effort(code);
  CoherentResult result;
  result.syndrome_probabilities.assign(size_t{1} << m, 0);
  size_t dim = size_t{1} << k;
  for (Syndrome s = 0; s < (Syndrome{1} << m); s++) {
    // Data register conditioned on the check register reading s.
    std::vector<Amplitude> branch(dim);
    double p = 0;
    for (size_t j = 0; j < dim; j++) {
      branch[j] = psi.amplitudes()[(s << k) | j];
      p += std::norm(branch[j]);
    }
    result.syndrome_probabilities[s] = p;
    if (p == 0) {
      continue;
    }
    DecodeEntry entry = decode(table, s);
    StateVector corrected(branch);
    PauliString fix(k, entry.correction.xs(), entry.correction.zs());
    corrected.apply_pauli(fix);
    result.fidelity += std::norm(target_data.inner(corrected));
  }
  return result;
}

CoherentResult coherent_fidelity_631(double epsilon) {
  return coherent_fidelity(fixtures::code_6_3_1(), epsilon);
}

}  // namespace cpc
