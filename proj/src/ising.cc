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

#include <algorithm>
#include <cmath>
#include <locale>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace cpc {

namespace {

constexpr size_t kMaxExhaustive = 24;

void check_priors(const ClassicalCode &code, const Priors &priors) {
  if (priors.bit.size() != code.bit_count || priors.check.size() != code.checks.size()) {
    throw std::invalid_argument("priors do not match the code's bit and check counts");
  }
  for (const auto *v : {&priors.bit, &priors.check}) {
    for (double p : *v) {
      if (!(p > 0 && p < 0.5)) {
        throw std::invalid_argument("error probabilities must lie in (0, 0.5)");
      }
    }
  }
}

void check_measurements(const ClassicalCode &code, const std::vector<uint8_t> &m) {
  if (m.size() != code.checks.size()) {
    throw std::invalid_argument("measurement count does not match check count");
  }
}

double log_odds(double p) {
  return std::log(p / (1 - p));
}

std::vector<size_t> mask_indices(uint64_t mask, size_t begin, size_t count) {
  std::vector<size_t> out;
  for (size_t i = 0; i < count; i++) {
    if ((mask >> (begin + i)) & 1) {
      out.push_back(i);
    }
  }
  return out;
}

bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

Priors Priors::uniform(const ClassicalCode &code, double p) {
  return {std::vector<double>(code.bit_count, p), std::vector<double>(code.checks.size(), p)};
}

double IsingProblem::energy(const std::vector<int> &spins) const {
  if (spins.size() != spin_count) {
    throw std::invalid_argument("spin count mismatch");
  }
  double e = 0;
  for (size_t h = 0; h < spin_count; h++) {
    e += fields[h] * spins[h];
  }
  for (const Term &t : checks) {
    int prod = 1;
    for (size_t s : t.spins) {
      prod *= spins[s];
    }
    e += t.coefficient * prod;
  }
  return e;
}

std::string IsingProblem::str() const {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.precision(10);
  for (size_t h = 0; h < spin_count; h++) {
    out << "field " << h << " " << fields[h] << "\n";
  }
  for (const Term &t : checks) {
    out << "check";
    for (size_t s : t.spins) {
      out << " " << s;
    }
    out << " " << t.coefficient << "\n";
  }
  return out.str();
}

IsingProblem ising_problem(const ClassicalCode &code, const Priors &priors, const std::vector<uint8_t> &measurements) {
  check_priors(code, priors);
  check_measurements(code, measurements);
  IsingProblem problem;
  problem.spin_count = code.bit_count;
  for (double p : priors.bit) {
    problem.fields.push_back(log_odds(p));
  }
  for (size_t i = 0; i < code.checks.size(); i++) {
    for (size_t b : code.checks[i].bits) {
      if (b >= code.bit_count) {
        throw std::invalid_argument("check references a bit beyond bit_count");
      }
    }
    double l = log_odds(priors.check[i]);
    problem.checks.push_back({code.checks[i].bits, measurements[i] ? -l : l});
  }
  return problem;
}

IsingGroundState ising_ground_state(const IsingProblem &problem) {
  size_t n = problem.spin_count;
  if (n > kMaxExhaustive) {
    throw std::invalid_argument("ising_ground_state: too many spins for exhaustive search");
  }
  IsingGroundState best;
  std::vector<size_t> best_set;
  bool have = false;
  std::vector<int> spins(n);
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); mask++) {
    for (size_t h = 0; h < n; h++) {
      spins[h] = ((mask >> h) & 1) ? -1 : 1;
    }
    double e = problem.energy(spins);
    if (!have || (e < best.energy && !nearly_equal(e, best.energy))) {
      best = {spins, e};
      best_set = mask_indices(mask, 0, n);
      have = true;
    } else if (nearly_equal(e, best.energy)) {
      std::vector<size_t> set = mask_indices(mask, 0, n);
      if (set < best_set) {
        best = {spins, e};
        best_set = std::move(set);
      }
    }
  }
  return best;
}

MlDecodeResult ising_decode(const ClassicalCode &code, const std::vector<uint8_t> &measurements,
                            const Priors &priors) {
  IsingProblem problem = ising_problem(code, priors, measurements);
  IsingGroundState ground = ising_ground_state(problem);
  MlDecodeResult out;
  for (size_t h = 0; h < code.bit_count; h++) {
    if (ground.spins[h] < 0) {
      out.bit_errors.push_back(h);
      out.log_likelihood += std::log(priors.bit[h]);
    } else {
      out.log_likelihood += std::log(1 - priors.bit[h]);
    }
  }
  for (size_t i = 0; i < code.checks.size(); i++) {
    int parity = 0;
    for (size_t b : code.checks[i].bits) {
      parity ^= ground.spins[b] < 0;
    }
    if (parity != measurements[i]) {
      out.check_errors.push_back(i);
      out.log_likelihood += std::log(priors.check[i]);
    } else {
      out.log_likelihood += std::log(1 - priors.check[i]);
    }
  }
  return out;
}

MlDecodeResult ml_decode_exhaustive(const ClassicalCode &code, const std::vector<uint8_t> &measurements,
                                    const Priors &priors) {
  check_priors(code, priors);
  check_measurements(code, measurements);
  size_t nb = code.bit_count;
  size_t nc = code.checks.size();
  if (nb + nc > kMaxExhaustive) {
    throw std::invalid_argument("ml_decode_exhaustive: instance too large for exhaustive search");
  }
  std::vector<uint64_t> check_masks;
  for (const auto &check : code.checks) {
    uint64_t m = 0;
    for (size_t b : check.bits) {
      m |= uint64_t{1} << b;
    }
    check_masks.push_back(m);
  }
  MlDecodeResult best;
  bool have = false;
  for (uint64_t mask = 0; mask < (uint64_t{1} << (nb + nc)); mask++) {
    bool consistent = true;
    for (size_t i = 0; i < nc && consistent; i++) {
      int parity = __builtin_parityll(mask & check_masks[i]) ^ int((mask >> (nb + i)) & 1);
      consistent = parity == measurements[i];
    }
    if (!consistent) {
      continue;
    }
    double ll = 0;
    for (size_t h = 0; h < nb; h++) {
      ll += ((mask >> h) & 1) ? std::log(priors.bit[h]) : std::log(1 - priors.bit[h]);
    }
    for (size_t i = 0; i < nc; i++) {
      ll += ((mask >> (nb + i)) & 1) ? std::log(priors.check[i]) : std::log(1 - priors.check[i]);
    }
    MlDecodeResult candidate{mask_indices(mask, 0, nb), mask_indices(mask, nb, nc), ll};
    bool better;
    if (!have) {
      better = true;
    } else if (nearly_equal(ll, best.log_likelihood)) {
      better = std::tie(candidate.bit_errors, candidate.check_errors) < std::tie(best.bit_errors, best.check_errors);
    } else {
      better = ll > best.log_likelihood;
    }
    if (better) {
      best = std::move(candidate);
      have = true;
    }
  }
  return best;
}

}  // namespace cpc
