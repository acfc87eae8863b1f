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

#include "cpc/propagation.h"

#include <algorithm>
#include <stdexcept>

namespace cpc {

namespace {

bool column_touches_data(const Gf2Matrix &m, size_t col) {
  for (size_t d = 0; d < m.rows(); d++) {
    if (m.get(d, col)) {
      return true;
    }
  }
  return false;
}

std::vector<std::string> numbered(const std::string &prefix, size_t n, const std::string &suffix = "") {
  std::vector<std::string> out;
  for (size_t k = 0; k < n; k++) {
    out.push_back(prefix + std::to_string(k + 1) + suffix);
  }
  return out;
}

}  // namespace

Gf2Matrix cross_propagation(const CpcCode &code) {
  require_valid(code);
  return add(code.mc, multiply(code.mb.transpose(), code.mp));
}

EffectiveCodes effective_codes(const CpcCode &code) {
  Gf2Matrix cross = cross_propagation(code);
  EffectiveCodes out;

  ClassicalCode &bit = out.bit;
  bit.bit_count = code.k + code.n_p;
  bit.bit_labels = numbered("d", code.k);
  for (auto &label : numbered("p", code.n_p)) {
    bit.bit_labels.push_back(label);
  }
  for (size_t i = 0; i < code.n_b; i++) {
    ClassicalCode::Check check{"b" + std::to_string(i + 1), {}};
    for (size_t d = 0; d < code.k; d++) {
      if (code.mb.get(d, i)) {
        check.bits.push_back(d);
      }
    }
    for (size_t p = 0; p < code.n_p; p++) {
      if (cross.get(i, p)) {
        check.bits.push_back(code.k + p);
      }
    }
    bit.checks.push_back(std::move(check));
  }
  for (size_t p = 0; p < code.n_p; p++) {
    if (!column_touches_data(code.mp, p)) {
      bit.harmless.push_back(code.k + p);
    }
  }

  ClassicalCode &phase = out.phase;
  phase.bit_count = code.k + code.n_b;
  phase.bit_labels = numbered("d", code.k);
  for (auto &label : numbered("b", code.n_b)) {
    phase.bit_labels.push_back(label);
  }
  for (size_t i = 0; i < code.n_p; i++) {
    ClassicalCode::Check check{"p" + std::to_string(i + 1), {}};
    for (size_t d = 0; d < code.k; d++) {
      if (code.mp.get(d, i)) {
        check.bits.push_back(d);
      }
    }
    for (size_t b = 0; b < code.n_b; b++) {
      if (code.mc.get(b, i)) {
        check.bits.push_back(code.k + b);
      }
    }
    phase.checks.push_back(std::move(check));
  }
  for (size_t b = 0; b < code.n_b; b++) {
    if (!column_touches_data(code.mb, b)) {
      phase.harmless.push_back(code.k + b);
    }
  }
  return out;
}

GeneralPropagation general_propagation(const GeneralCpcCode &code) {
  require_valid(code);
  size_t n = code.n_c;
  GeneralPropagation out{Gf2Matrix(n, n), std::vector<bool>(n, false)};
  for (size_t i = 0; i < n; i++) {
    for (size_t j = 0; j < n; j++) {
      bool parity = false;
      for (size_t d = 0; d < code.k; d++) {
        parity ^= code.mbs.get(d, i) && code.mps.get(d, j);
      }
      if (i == j) {
        out.self_loops[i] = parity;
      } else {
        out.arrows.set(i, j, parity ^ code.mcs.get(std::min(i, j), std::max(i, j)));
      }
    }
  }
  return out;
}

ClassicalCode general_to_classical(const GeneralCpcCode &code) {
  GeneralPropagation prop = general_propagation(code);
  ClassicalCode out;
  size_t k = code.k;
  out.bit_count = 2 * k + code.n_c;
  out.bit_labels = numbered("d", k, ".x");
  for (auto &label : numbered("d", k, ".z")) {
    out.bit_labels.push_back(label);
  }
  for (auto &label : numbered("c", code.n_c)) {
    out.bit_labels.push_back(label);
  }
  for (size_t i = 0; i < code.n_c; i++) {
    ClassicalCode::Check check{"c" + std::to_string(i + 1), {}};
    for (size_t d = 0; d < k; d++) {
      if (code.mbs.get(d, i)) {
        check.bits.push_back(d);
      }
    }
    for (size_t d = 0; d < k; d++) {
      if (code.mps.get(d, i)) {
        check.bits.push_back(k + d);
      }
    }
    for (size_t j = 0; j < code.n_c; j++) {
      if (i == j ? bool(prop.self_loops[i]) : prop.arrows.get(i, j)) {
        check.bits.push_back(2 * k + j);
      }
    }
    out.checks.push_back(std::move(check));
  }
  for (size_t c : harmless_qubits(code)) {
    out.harmless.push_back(2 * k + (c - k));
  }
  return out;
}

std::vector<size_t> harmless_qubits(const CpcCode &code) {
  require_valid(code);
  std::vector<size_t> out;
  for (size_t b = 0; b < code.n_b; b++) {
    if (!column_touches_data(code.mb, b)) {
      out.push_back(code.bit_qubit(b));
    }
  }
  for (size_t p = 0; p < code.n_p; p++) {
    if (!column_touches_data(code.mp, p)) {
      out.push_back(code.phase_qubit(p));
    }
  }
  return out;
}

std::vector<size_t> harmless_qubits(const GeneralCpcCode &code) {
  require_valid(code);
  std::vector<size_t> out;
  for (size_t c = 0; c < code.n_c; c++) {
    if (!column_touches_data(code.mbs, c) && !column_touches_data(code.mps, c)) {
      out.push_back(code.check_qubit(c));
    }
  }
  return out;
}

std::vector<size_t> harmless_qubits(const AnyCode &code) {
  return std::visit([](const auto &c) { return harmless_qubits(c); }, code);
}

std::vector<size_t> classical_syndrome(const ClassicalCode &code, size_t bit) {
  if (bit >= code.bit_count) {
    throw std::out_of_range("classical_syndrome: bit out of range");
  }
  std::vector<size_t> out;
  for (size_t i = 0; i < code.checks.size(); i++) {
    const auto &bits = code.checks[i].bits;
    if (std::binary_search(bits.begin(), bits.end(), bit)) {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace cpc
