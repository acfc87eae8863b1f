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

#include "cpc/stabilizers.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cpc/circuit.h"
#include "cpc/propagation.h"

namespace cpc {

namespace {

uint64_t bit(size_t q) {
  return uint64_t{1} << q;
}

// Incremental GF(2) basis over symplectic vectors (x mask, z mask).
class SymplecticBasis {
 public:
  void add(uint64_t x, uint64_t z) {
    reduce(x, z);
    if (x || z) {
      rows_.push_back({x, z});
      std::sort(rows_.begin(), rows_.end(), [](const Row &a, const Row &b) { return lead(a) > lead(b); });
    }
  }

  bool contains(uint64_t x, uint64_t z) const {
    reduce(x, z);
    return x == 0 && z == 0;
  }

 private:
  struct Row {
    uint64_t x;
    uint64_t z;
  };

  // Position of the leading bit with z bits ranked above x bits; -1 for zero.
  static int lead(const Row &r) {
    if (r.z) {
      return 64 + 63 - std::countl_zero(r.z);
    }
    if (r.x) {
      return 63 - std::countl_zero(r.x);
    }
    return -1;
  }

  void reduce(uint64_t &x, uint64_t &z) const {
    for (const Row &r : rows_) {
      int l = lead(r);
      bool has = l >= 64 ? ((z >> (l - 64)) & 1) : ((x >> l) & 1);
      if (has) {
        x ^= r.x;
        z ^= r.z;
      }
    }
  }

  std::vector<Row> rows_;
};

// Rows of `m` restricted to nonzero rows of its reduced form.
Gf2Matrix reduced_rows(const Gf2Matrix &m) {
  RrefResult r = rref(m);
  std::vector<size_t> keep;
  for (size_t k = 0; k < r.rank; k++) {
    keep.push_back(k);
  }
  return r.reduced.select_rows(keep);
}

// Left-multiplies `m` by the inverse of its restriction to `cols` (assumed
// square and invertible), making those columns an identity block.
Gf2Matrix normalize_on(const Gf2Matrix &m, const std::vector<size_t> &cols) {
  Gf2Matrix aug = hstack(m.select_columns(cols), m);
  RrefResult r = rref(aug);
  std::vector<size_t> rest;
  for (size_t c = 0; c < m.cols(); c++) {
    rest.push_back(cols.size() + c);
  }
  return r.reduced.select_columns(rest);
}

// Lexicographically first column basis of `m` using only `allowed` columns.
std::vector<size_t> greedy_basis(const Gf2Matrix &m, const std::vector<size_t> &allowed) {
  std::vector<size_t> chosen;
  size_t current = 0;
  for (size_t c : allowed) {
    std::vector<size_t> trial = chosen;
    trial.push_back(c);
    size_t r = rank(m.select_columns(trial));
    if (r > current) {
      chosen = trial;
      current = r;
      if (current == m.rows()) {
        break;
      }
    }
  }
  return chosen;
}

bool next_combination(std::vector<size_t> &comb, size_t n) {
  size_t k = comb.size();
  for (size_t i = k; i-- > 0;) {
    if (comb[i] < n - k + i) {
      comb[i]++;
      for (size_t j = i + 1; j < k; j++) {
        comb[j] = comb[j - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<PauliString> stabilizers_split(const CpcCode &code) {
  Gf2Matrix cross = cross_propagation(code);
  size_t n = code.qubit_count();
  std::vector<PauliString> out;
  for (size_t i = 0; i < code.n_b; i++) {
    uint64_t z = bit(code.bit_qubit(i));
    for (size_t d = 0; d < code.k; d++) {
      if (code.mb.get(d, i)) {
        z |= bit(d);
      }
    }
    for (size_t p = 0; p < code.n_p; p++) {
      if (cross.get(i, p)) {
        z |= bit(code.phase_qubit(p));
      }
    }
    out.emplace_back(n, 0, z);
  }
  for (size_t i = 0; i < code.n_p; i++) {
    uint64_t x = bit(code.phase_qubit(i));
    for (size_t d = 0; d < code.k; d++) {
      if (code.mp.get(d, i)) {
        x |= bit(d);
      }
    }
    for (size_t b = 0; b < code.n_b; b++) {
      if (code.mc.get(b, i)) {
        x |= bit(code.bit_qubit(b));
      }
    }
    out.emplace_back(n, x, 0);
  }
  return out;
}

std::vector<PauliString> stabilizers_general(const GeneralCpcCode &code) {
  require_valid(code);
  size_t n = code.qubit_count();
  std::vector<PauliString> out;
  for (size_t i = 0; i < code.n_c; i++) {
    uint64_t z = bit(code.check_qubit(i));
    uint64_t x = 0;
    // Data qubits that carry Y. Pushing them through the CCZX layer picks up
    // a minus sign when their count is 2 or 3 mod 4.
    size_t shared = 0;
    for (size_t d = 0; d < code.k; d++) {
      if (code.mbs.get(d, i)) {
        z |= bit(d);
      }
      if (code.mps.get(d, i)) {
        x |= bit(d);
      }
      shared += code.mbs.get(d, i) && code.mps.get(d, i);
    }
    for (size_t j = 0; j < code.n_c; j++) {
      bool e = code.mcs.get(j, i) ^ code.mcs.get(i, j);
      for (size_t d = 0; d < code.k; d++) {
        e ^= code.mps.get(d, j) && code.mbs.get(d, i);
      }
      if (e) {
        x |= bit(code.check_qubit(j));
      }
    }
    out.emplace_back(n, x, z, shared % 4 >= 2 ? 2 : 0);
  }
  return out;
}

std::vector<PauliString> stabilizers(const AnyCode &code) {
  if (const auto *split = std::get_if<CpcCode>(&code)) {
    return stabilizers_split(*split);
  }
  return stabilizers_general(std::get<GeneralCpcCode>(code));
}

std::vector<PauliString> circuit_stabilizers(const AnyCode &code) {
  Circuit enc = encode_circuit(code);
  size_t n = enc.qubit_count;
  std::vector<PauliString> out;
  if (const auto *split = std::get_if<CpcCode>(&code)) {
    for (size_t i = 0; i < split->n_b; i++) {
      out.push_back(conjugate_pauli(enc, PauliString::single(n, split->bit_qubit(i), 'Z')));
    }
    for (size_t i = 0; i < split->n_p; i++) {
      out.push_back(conjugate_pauli(enc, PauliString::single(n, split->phase_qubit(i), 'X')));
    }
  } else {
    const auto &general = std::get<GeneralCpcCode>(code);
    for (size_t i = 0; i < general.n_c; i++) {
      out.push_back(conjugate_pauli(enc, PauliString::single(n, general.check_qubit(i), 'Z')));
    }
  }
  return out;
}

SymplecticForm symplectic_form(const std::vector<PauliString> &generators, size_t num_qubits) {
  SymplecticForm form{Gf2Matrix(generators.size(), num_qubits), Gf2Matrix(generators.size(), num_qubits)};
  for (size_t r = 0; r < generators.size(); r++) {
    if (generators[r].num_qubits() != num_qubits) {
      throw std::invalid_argument("symplectic_form: generator length mismatch");
    }
    form.g_z.set_row_mask(r, generators[r].zs());
    form.g_x.set_row_mask(r, generators[r].xs());
  }
  return form;
}

SymplecticForm symplectic_matrix(const CpcCode &code) {
  return symplectic_form(stabilizers_split(code), code.qubit_count());
}

Gf2Matrix symplectic_products(const SymplecticForm &form) {
  return add(multiply(form.g_z, form.g_x.transpose()), multiply(form.g_x, form.g_z.transpose()));
}

CssCode cpc_to_css(const CpcCode &code) {
  SymplecticForm form = symplectic_matrix(code);
  std::vector<size_t> z_rows, x_rows;
  for (size_t r = 0; r < code.n_b; r++) {
    z_rows.push_back(r);
  }
  for (size_t r = 0; r < code.n_p; r++) {
    x_rows.push_back(code.n_b + r);
  }
  return {form.g_z.select_rows(z_rows), form.g_x.select_rows(x_rows)};
}

Gf2Matrix css_group_matrix(const CssCode &css) {
  if (css.g_z.cols() != css.g_x.cols()) {
    throw std::invalid_argument("css_group_matrix: column count mismatch");
  }
  size_t n = css.g_z.cols();
  return vstack(hstack(css.g_z, Gf2Matrix(css.g_z.rows(), n)), hstack(Gf2Matrix(css.g_x.rows(), n), css.g_x));
}

CssConversion css_to_cpc(const Gf2Matrix &g_z, const Gf2Matrix &g_x) {
  if (g_z.cols() != g_x.cols()) {
    throw std::invalid_argument("css_to_cpc: g_z and g_x have different column counts");
  }
  if (!multiply(g_z, g_x.transpose()).is_zero()) {
    throw std::invalid_argument("css_to_cpc: Z and X generators do not commute");
  }
  size_t n = g_z.cols();
  Gf2Matrix rz = reduced_rows(g_z);
  Gf2Matrix rx = reduced_rows(g_x);
  size_t nb = rz.rows();
  size_t np = rx.rows();
  if (nb + np > n) {
    throw std::runtime_error("css_to_cpc: more independent checks than qubits");
  }

  std::vector<size_t> sz(nb), sx;
  for (size_t k = 0; k < nb; k++) {
    sz[k] = k;
  }
  bool found = false;
  do {
    if (rank(rz.select_columns(sz)) != nb) {
      continue;
    }
    std::vector<size_t> rest;
    for (size_t c = 0; c < n; c++) {
      if (!std::binary_search(sz.begin(), sz.end(), c)) {
        rest.push_back(c);
      }
    }
    sx = greedy_basis(rx, rest);
    if (sx.size() == np) {
      found = true;
      break;
    }
  } while (nb > 0 && next_combination(sz, n));
  if (!found) {
    throw std::runtime_error("css_to_cpc: no disjoint pivot columns exist for the Z and X generators");
  }

  Gf2Matrix gz = normalize_on(rz, sz);
  Gf2Matrix gx = normalize_on(rx, sx);

  std::vector<size_t> data;
  for (size_t c = 0; c < n; c++) {
    if (!std::binary_search(sz.begin(), sz.end(), c) && std::find(sx.begin(), sx.end(), c) == sx.end()) {
      data.push_back(c);
    }
  }
  CssConversion out;
  out.permutation = data;
  out.permutation.insert(out.permutation.end(), sz.begin(), sz.end());
  out.permutation.insert(out.permutation.end(), sx.begin(), sx.end());

  Gf2Matrix mb = gz.select_columns(data).transpose();
  Gf2Matrix mp = gx.select_columns(data).transpose();
  Gf2Matrix mc = gx.select_columns(sz).transpose();
  out.code = make_code(mb, mp, mc);

  CssCode back = cpc_to_css(out.code);
  std::vector<size_t> inverse(n);
  for (size_t c = 0; c < n; c++) {
    inverse[out.permutation[c]] = c;
  }
  CssCode restored{back.g_z.select_columns(inverse), back.g_x.select_columns(inverse)};
  if (!row_space_equal(css_group_matrix(restored), css_group_matrix({g_z, g_x}))) {
    throw std::logic_error("css_to_cpc: converted code does not reproduce the input group");
  }
  return out;
}

CssCode parse_css(std::string_view text) {
  std::vector<std::pair<size_t, std::string>> lines;
  size_t number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    number++;
    std::string line(text.substr(pos, end - pos));
    size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line.resize(hash);
    }
    size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos) {
      size_t last = line.find_last_not_of(" \t\r");
      lines.emplace_back(number, line.substr(first, last - first + 1));
    }
    if (end == text.size()) {
      break;
    }
    pos = end + 1;
  }
  size_t at = 0;
  auto next = [&](const char *what) -> const std::pair<size_t, std::string> & {
    if (at >= lines.size()) {
      throw ParseError(lines.empty() ? 1 : lines.back().first + 1, 1, std::string("missing ") + what);
    }
    return lines[at++];
  };
  const auto &header = next("header 'CSS'");
  if (header.second != "CSS") {
    throw ParseError(header.first, 1, "malformed header '" + header.second + "'");
  }
  const auto &qubits = next("'qubits <n>'");
  size_t n = 0;
  if (qubits.second.rfind("qubits ", 0) != 0) {
    throw ParseError(qubits.first, 1, "expected 'qubits <n>'");
  }
  try {
    size_t used = 0;
    std::string num = qubits.second.substr(7);
    n = std::stoul(num, &used);
    if (used != num.size()) {
      throw std::invalid_argument("trailing");
    }
  } catch (const std::logic_error &) {
    throw ParseError(qubits.first, 8, "invalid qubit count");
  }
  auto section = [&](const char *name) {
    const auto &head = next(name);
    if (head.second != name) {
      throw ParseError(head.first, 1, std::string("expected section '") + name + "'");
    }
    std::vector<std::string> rows;
    while (at < lines.size() && lines[at].second != "GZ" && lines[at].second != "GX") {
      const auto &row = lines[at++];
      for (size_t c = 0; c < row.second.size(); c++) {
        if (row.second[c] != '0' && row.second[c] != '1') {
          throw ParseError(row.first, c + 1, "non-binary character");
        }
      }
      if (row.second.size() != n) {
        throw ParseError(row.first, 1, "inconsistent row length");
      }
      rows.push_back(row.second);
    }
    return Gf2Matrix::from_strings(rows, n);
  };
  CssCode css;
  css.g_z = section("GZ");
  css.g_x = section("GX");
  if (at < lines.size()) {
    throw ParseError(lines[at].first, 1, "unexpected content");
  }
  return css;
}

std::string serialize_css(const CssCode &css) {
  std::string out = "CSS\nqubits " + std::to_string(css.g_z.cols()) + "\nGZ\n";
  out += css.g_z.str();
  out += "GX\n";
  out += css.g_x.str();
  return out;
}

LogicalOperators logical_operators(const AnyCode &code) {
  Circuit enc = encode_circuit(code);
  size_t n = enc.qubit_count;
  LogicalOperators out;
  for (size_t d = 0; d < data_count(code); d++) {
    out.x.push_back(conjugate_pauli(enc, PauliString::single(n, d, 'X')));
    out.z.push_back(conjugate_pauli(enc, PauliString::single(n, d, 'Z')));
  }
  return out;
}

std::optional<size_t> code_distance(const std::vector<PauliString> &generators, size_t num_qubits, size_t w_max) {
  SymplecticBasis group;
  for (const PauliString &g : generators) {
    if (g.num_qubits() != num_qubits) {
      throw std::invalid_argument("code_distance: generator length mismatch");
    }
    group.add(g.xs(), g.zs());
  }
  auto is_logical = [&](uint64_t x, uint64_t z) {
    for (const PauliString &g : generators) {
      if (std::popcount((x & g.zs()) ^ (z & g.xs())) & 1) {
        return false;
      }
    }
    return !group.contains(x, z);
  };
  for (size_t w = 1; w <= std::min(w_max, num_qubits); w++) {
    std::vector<size_t> support(w);
    for (size_t k = 0; k < w; k++) {
      support[k] = k;
    }
    do {
      size_t assignments = 1;
      for (size_t k = 0; k < w; k++) {
        assignments *= 3;
      }
      for (size_t a = 0; a < assignments; a++) {
        uint64_t x = 0, z = 0;
        size_t code = a;
        for (size_t k = 0; k < w; k++) {
          size_t p = code % 3 + 1;  // 1 = X, 2 = Z, 3 = Y
          code /= 3;
          if (p & 1) {
            x |= bit(support[k]);
          }
          if (p & 2) {
            z |= bit(support[k]);
          }
        }
        if (is_logical(x, z)) {
          return w;
        }
      }
    } while (next_combination(support, num_qubits));
  }
  return std::nullopt;
}

std::optional<size_t> code_distance(const AnyCode &code, size_t w_max) {
  return code_distance(stabilizers(code), qubit_count(code), w_max);
}

}  // namespace cpc
