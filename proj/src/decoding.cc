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

#include "cpc/decoding.h"

#include <algorithm>

#include "cpc/circuit.h"
#include "cpc/propagation.h"

namespace cpc {

namespace {

// True for checks read out in the conjugate basis.
std::vector<bool> x_basis_checks(const AnyCode &code) {
  std::vector<bool> out(check_count(code), false);
  if (const auto *split = std::get_if<CpcCode>(&code)) {
    for (size_t p = 0; p < split->n_p; p++) {
      out[split->n_b + p] = true;
    }
  }
  return out;
}

ErrorEffect effect_after(const PauliString &residual, size_t k, const std::vector<bool> &x_basis) {
  ErrorEffect out;
  for (size_t i = 0; i < x_basis.size(); i++) {
    bool flipped = x_basis[i] ? residual.z(k + i) : residual.x(k + i);
    if (flipped) {
      out.syndrome |= Syndrome{1} << i;
    }
  }
  out.data_residual = residual.slice(0, k);
  return out;
}

std::string error_label(const PauliString &p, const AnyCode &code) {
  if (p.is_identity()) {
    return "no error";
  }
  PauliString unsigned_p(p.num_qubits(), p.xs(), p.zs());
  return unsigned_p.str_labels(qubit_labels(code));
}

}  // namespace

size_t check_count(const AnyCode &code) {
  if (const auto *split = std::get_if<CpcCode>(&code)) {
    return split->n_b + split->n_p;
  }
  return std::get<GeneralCpcCode>(code).n_c;
}

std::vector<std::string> check_labels(const AnyCode &code) {
  std::vector<std::string> labels = qubit_labels(code);
  return {labels.begin() + data_count(code), labels.end()};
}

std::string syndrome_str(Syndrome s, const std::vector<std::string> &labels) {
  std::string out = "{";
  bool first = true;
  for (size_t i = 0; i < labels.size(); i++) {
    if ((s >> i) & 1) {
      if (!first) {
        out += ',';
      }
      out += labels[i];
      first = false;
    }
  }
  return out + "}";
}

std::string syndrome_bits(Syndrome s, size_t n) {
  std::string out(n, '0');
  for (size_t i = 0; i < n; i++) {
    if ((s >> i) & 1) {
      out[i] = '1';
    }
  }
  return out;
}

Syndrome parse_syndrome_bits(const std::string &bits) {
  if (bits.size() > 64) {
    throw std::invalid_argument("syndrome longer than 64 bits");
  }
  Syndrome s = 0;
  for (size_t i = 0; i < bits.size(); i++) {
    if (bits[i] == '1') {
      s |= Syndrome{1} << i;
    } else if (bits[i] != '0') {
      throw std::invalid_argument("syndrome must consist of '0' and '1'");
    }
  }
  return s;
}

ErrorEffect propagate_error(const AnyCode &code, const PauliString &error) {
  Circuit dec = decode_circuit(code);
  PauliString residual = conjugate_pauli(dec, error);
  return effect_after(residual, data_count(code), x_basis_checks(code));
}

const ErrorEntry &ErrorTable::find(const PauliString &error) const {
  for (const ErrorEntry &e : entries) {
    if (e.error.equal_up_to_phase(error)) {
      return e;
    }
  }
  throw std::out_of_range("error not in table: " + error.str());
}

ErrorTable error_table(const AnyCode &code) {
  Circuit dec = decode_circuit(code);
  size_t n = dec.qubit_count;
  size_t k = data_count(code);
  std::vector<bool> x_basis = x_basis_checks(code);
  std::vector<size_t> harmless = harmless_qubits(code);
  ErrorTable table;
  table.check_count = x_basis.size();
  for (size_t q = 0; q < n; q++) {
    bool harmful = q < k || !std::binary_search(harmless.begin(), harmless.end(), q);
    for (char kind : {'X', 'Z', 'Y'}) {
      PauliString error = PauliString::single(n, q, kind);
      ErrorEffect effect = effect_after(conjugate_pauli(dec, error), k, x_basis);
      table.entries.push_back({error, effect.syndrome, effect.data_residual, harmful});
    }
  }
  return table;
}

std::string CorrectabilityReport::certificate(const AnyCode &code) const {
  std::vector<std::string> labels = check_labels(code);
  std::string out;
  for (const Collision &c : collisions) {
    out += error_label(c.a, code) + " ~ " + error_label(c.b, code) + " -> " + syndrome_str(c.syndrome, labels) + "\n";
  }
  return out;
}

namespace {

struct Candidate {
  PauliString error;
  Syndrome syndrome;
  bool harmful;
};

void collect_collisions(const std::vector<Candidate> &candidates, CorrectabilityReport &report) {
  std::map<Syndrome, std::vector<size_t>> groups;
  for (size_t i = 0; i < candidates.size(); i++) {
    groups[candidates[i].syndrome].push_back(i);
  }
  for (const auto &[syndrome, members] : groups) {
    bool any_harmful = false;
    for (size_t i : members) {
      any_harmful |= candidates[i].harmful;
    }
    if (members.size() < 2 || !any_harmful) {
      continue;
    }
    for (size_t j = 1; j < members.size(); j++) {
      const Candidate &a = candidates[members[0]];
      const Candidate &b = candidates[members[j]];
      if (a.harmful || b.harmful) {
        report.collisions.push_back({a.error, b.error, syndrome});
      }
    }
    if (!candidates[members[0]].harmful) {
      // Harmful members may still collide with each other.
      for (size_t i = 1; i < members.size(); i++) {
        for (size_t j = i + 1; j < members.size(); j++) {
          const Candidate &a = candidates[members[i]];
          const Candidate &b = candidates[members[j]];
          if (a.harmful && b.harmful) {
            report.collisions.push_back({a.error, b.error, syndrome});
          }
        }
      }
    }
  }
  report.ok = report.collisions.empty();
}

std::vector<Candidate> single_error_candidates(const AnyCode &code, const ErrorTable &table) {
  std::vector<Candidate> out;
  out.push_back({PauliString(qubit_count(code)), 0, false});
  for (const ErrorEntry &e : table.entries) {
    out.push_back({e.error, e.syndrome, e.harmful});
  }
  return out;
}

}  // namespace

CorrectabilityReport is_single_error_correcting(const AnyCode &code) {
  ErrorTable table = error_table(code);
  CorrectabilityReport report;
  collect_collisions(single_error_candidates(code, table), report);
  return report;
}

const char *decode_class_name(DecodeClass c) {
  switch (c) {
    case DecodeClass::kNoError:
      return "no_error";
    case DecodeClass::kHarmless:
      return "harmless";
    case DecodeClass::kCorrected:
      return "corrected";
    case DecodeClass::kUncorrectable:
      return "uncorrectable";
  }
  return "";
}

DecodeTable decode_table_best_effort(const AnyCode &code) {
  ErrorTable errors = error_table(code);
  size_t k = data_count(code);
  size_t n = qubit_count(code);
  DecodeTable table;
  table.data_count = k;
  table.check_count = errors.check_count;
  table.entries[0] = {PauliString(k), DecodeClass::kNoError, PauliString(n)};
  for (const ErrorEntry &e : errors.entries) {
    PauliString correction(k, e.data_residual.xs(), e.data_residual.zs());
    DecodeClass cls = correction.is_identity() ? DecodeClass::kHarmless : DecodeClass::kCorrected;
    auto it = table.entries.find(e.syndrome);
    if (it == table.entries.end()) {
      table.entries[e.syndrome] = {correction, cls, e.error};
    } else if (it->second.cls == DecodeClass::kCorrected && cls == DecodeClass::kHarmless) {
      it->second = {correction, cls, e.error};
    }
  }
  return table;
}

DecodeTable decode_table(const AnyCode &code) {
  CorrectabilityReport report = is_single_error_correcting(code);
  if (!report.ok) {
    throw UncorrectableCodeError("code is not single-error correcting:\n" + report.certificate(code),
                                 std::move(report));
  }
  return decode_table_best_effort(code);
}

DecodeEntry decode(const DecodeTable &table, Syndrome syndrome) {
  auto it = table.entries.find(syndrome);
  if (it == table.entries.end()) {
    return {PauliString(table.data_count), DecodeClass::kUncorrectable,
            PauliString(table.data_count + table.check_count)};
  }
  return it->second;
}

CorrectabilityReport cnot_compatible(const CpcCode &code, size_t c, size_t t) {
  if (c >= code.k || t >= code.k) {
    throw std::invalid_argument("cnot_compatible: data index out of range");
  }
  if (c == t) {
    throw std::invalid_argument("cnot_compatible: control and target must differ");
  }
  AnyCode any = code;
  ErrorTable table = error_table(any);
  CorrectabilityReport report;
  std::vector<Candidate> candidates = single_error_candidates(any, table);
  collect_collisions(candidates, report);
  if (!report.ok) {
    return report;
  }
  size_t n = code.qubit_count();
  uint64_t pair = (uint64_t{1} << c) | (uint64_t{1} << t);
  std::vector<Candidate> all = candidates;
  for (const PauliString &p : {PauliString(n, pair, 0), PauliString(n, 0, pair)}) {
    all.push_back({p, propagate_error(any, p).syndrome, true});
  }
  collect_collisions(all, report);
  return report;
}

CpcCode augment_for_cnot(const CpcCode &code, size_t c, size_t t) {
  require_valid(code);
  if (c >= code.k || t >= code.k || c == t) {
    throw std::invalid_argument("augment_for_cnot: need distinct data indices below k");
  }
  auto first_free = [&](const Gf2Matrix &m, size_t cols) -> size_t {
    for (size_t j = 0; j < cols; j++) {
      bool touches = false;
      for (size_t d = 0; d < code.k; d++) {
        touches |= m.get(d, j);
      }
      if (!touches) {
        return j;
      }
    }
    return cols;
  };
  size_t b_free = first_free(code.mb, code.n_b);
  size_t p_free = first_free(code.mp, code.n_p);
  if (b_free == code.n_b || p_free == code.n_p) {
    throw std::invalid_argument("augment_for_cnot: code has no check qubit free of data edges to link against");
  }
  Gf2Matrix mb(code.k, code.n_b + 1), mp(code.k, code.n_p + 1), mc(code.n_b + 1, code.n_p + 1);
  for (size_t d = 0; d < code.k; d++) {
    for (size_t j = 0; j < code.n_b; j++) {
      mb.set(d, j, code.mb.get(d, j));
    }
    for (size_t j = 0; j < code.n_p; j++) {
      mp.set(d, j, code.mp.get(d, j));
    }
  }
  for (size_t i = 0; i < code.n_b; i++) {
    for (size_t j = 0; j < code.n_p; j++) {
      mc.set(i, j, code.mc.get(i, j));
    }
  }
  mb.set(c, code.n_b, true);
  mp.set(t, code.n_p, true);
  mc.set(code.n_b, p_free, true);
  mc.set(b_free, code.n_p, true);
  mc.set(code.n_b, code.n_p, true);
  return make_code(mb, mp, mc);
}

}  // namespace cpc
