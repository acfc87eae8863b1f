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

#include "cpc/pauli.h"

#include <bit>
#include <stdexcept>

namespace cpc {

namespace {

uint64_t low_mask(size_t n) {
  return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

// Exponent of i picked up by the single-qubit product (x1,z1)(x2,z2).
int product_phase(bool x1, bool z1, bool x2, bool z2) {
  if (x1 && z1) {
    return int(z2) - int(x2);
  }
  if (x1) {
    return int(z2) * (2 * int(x2) - 1);
  }
  if (z1) {
    return int(x2) * (1 - 2 * int(z2));
  }
  return 0;
}

}  // namespace

PauliString::PauliString(size_t num_qubits) : n_(num_qubits) {
  if (num_qubits > kMaxPauliQubits) {
    throw std::invalid_argument("PauliString supports at most 64 qubits");
  }
}

PauliString::PauliString(size_t num_qubits, uint64_t xs, uint64_t zs, uint8_t phase)
    : n_(num_qubits), xs_(xs), zs_(zs), phase_(phase & 3) {
  if (num_qubits > kMaxPauliQubits) {
    throw std::invalid_argument("PauliString supports at most 64 qubits");
  }
  if ((xs | zs) & ~low_mask(num_qubits)) {
    throw std::invalid_argument("PauliString mask exceeds qubit count");
  }
}

PauliString PauliString::single(size_t num_qubits, size_t q, char pauli) {
  PauliString p(num_qubits);
  p.check_qubit(q);
  uint64_t bit = uint64_t{1} << q;
  switch (pauli) {
    case 'I':
      break;
    case 'X':
      p.xs_ = bit;
      break;
    case 'Y':
      p.xs_ = bit;
      p.zs_ = bit;
      break;
    case 'Z':
      p.zs_ = bit;
      break;
    default:
      throw std::invalid_argument(std::string("unknown Pauli '") + pauli + "'");
  }
  return p;
}

PauliString PauliString::from_text(std::string_view text) {
  uint8_t phase = 0;
  size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') {
      phase = 2;
    }
    pos++;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase = (phase + 1) & 3;
    pos++;
  }
  std::string_view body = text.substr(pos);
  PauliString p(body.size());
  for (size_t q = 0; q < body.size(); q++) {
    char c = body[q];
    if (c == '_') {
      c = 'I';
    }
    PauliString s = single(body.size(), q, c);
    p.xs_ |= s.xs_;
    p.zs_ |= s.zs_;
  }
  p.phase_ = phase;
  return p;
}

void PauliString::check_qubit(size_t q) const {
  if (q >= n_) {
    throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " + std::to_string(n_) + " qubits");
  }
}

char PauliString::at(size_t q) const {
  check_qubit(q);
  return "IXZY"[x(q) + 2 * z(q)];
}

size_t PauliString::weight() const {
  return std::popcount(xs_ | zs_);
}

PauliString PauliString::slice(size_t begin, size_t count) const {
  if (begin + count > n_) {
    throw std::out_of_range("PauliString slice out of range");
  }
  uint64_t m = low_mask(count);
  return PauliString(count, (xs_ >> begin) & m, (zs_ >> begin) & m, 0);
}

bool PauliString::commutes(const PauliString &other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("PauliString length mismatch");
  }
  return (std::popcount((xs_ & other.zs_) ^ (zs_ & other.xs_)) & 1) == 0;
}

bool PauliString::equal_up_to_phase(const PauliString &other) const {
  return n_ == other.n_ && xs_ == other.xs_ && zs_ == other.zs_;
}

PauliString PauliString::operator*(const PauliString &other) const {
  PauliString result = *this;
  result *= other;
  return result;
}

PauliString &PauliString::operator*=(const PauliString &other) {
  if (n_ != other.n_) {
    throw std::invalid_argument("PauliString length mismatch");
  }
  int acc = phase_ + other.phase_;
  uint64_t touched = (xs_ | zs_) & (other.xs_ | other.zs_);
  while (touched) {
    size_t q = std::countr_zero(touched);
    touched &= touched - 1;
    acc += product_phase(x(q), z(q), other.x(q), other.z(q));
  }
  xs_ ^= other.xs_;
  zs_ ^= other.zs_;
  phase_ = uint8_t(((acc % 4) + 4) % 4);
  return *this;
}

bool PauliString::operator<(const PauliString &other) const {
  if (n_ != other.n_) {
    return n_ < other.n_;
  }
  if (xs_ != other.xs_) {
    return xs_ < other.xs_;
  }
  if (zs_ != other.zs_) {
    return zs_ < other.zs_;
  }
  return phase_ < other.phase_;
}

void PauliString::apply_h(size_t q) {
  check_qubit(q);
  bool xq = x(q);
  bool zq = z(q);
  if (xq && zq) {
    phase_ ^= 2;
  }
  uint64_t bit = uint64_t{1} << q;
  xs_ = (xs_ & ~bit) | (zq ? bit : 0);
  zs_ = (zs_ & ~bit) | (xq ? bit : 0);
}

void PauliString::apply_cnot(size_t control, size_t target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) {
    throw std::invalid_argument("CNOT on a single qubit");
  }
  bool xc = x(control), zc = z(control), xt = x(target), zt = z(target);
  if (xc && zt && (xt == zc)) {
    phase_ ^= 2;
  }
  if (xc) {
    xs_ ^= uint64_t{1} << target;
  }
  if (zt) {
    zs_ ^= uint64_t{1} << control;
  }
}

void PauliString::apply_cz(size_t a, size_t b) {
  check_qubit(a);
  check_qubit(b);
  if (a == b) {
    throw std::invalid_argument("CZ on a single qubit");
  }
  bool xa = x(a), za = z(a), xb = x(b), zb = z(b);
  if (xa && xb && (za != zb)) {
    phase_ ^= 2;
  }
  if (xb) {
    zs_ ^= uint64_t{1} << a;
  }
  if (xa) {
    zs_ ^= uint64_t{1} << b;
  }
}

void PauliString::apply_cczx(size_t a, size_t b) {
  apply_h(a);
  apply_h(b);
  apply_cz(a, b);
  apply_h(a);
  apply_h(b);
}

std::string PauliString::str() const {
  static const char *kPhase[] = {"+", "+i", "-", "-i"};
  std::string out = kPhase[phase_];
  for (size_t q = 0; q < n_; q++) {
    out += at(q);
  }
  return out;
}

std::string PauliString::str_labels(const std::vector<std::string> &labels) const {
  if (labels.size() != n_) {
    throw std::invalid_argument("label count does not match qubit count");
  }
  static const char *kPhase[] = {"", "i", "-", "-i"};
  std::string out = kPhase[phase_];
  if (is_identity()) {
    return out + "I";
  }
  bool first_group = true;
  for (char kind : {'Z', 'X', 'Y'}) {
    bool opened = false;
    for (size_t q = 0; q < n_; q++) {
      if (at(q) != kind) {
        continue;
      }
      if (!opened) {
        if (!first_group) {
          out += ' ';
        }
        out += kind;
        opened = true;
        first_group = false;
      }
      out += ' ';
      out += labels[q];
    }
  }
  return out;
}

}  // namespace cpc
