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

#include <charconv>
#include <fstream>
#include <sstream>

namespace cpc {

namespace {

std::string dims(const Gf2Matrix &m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void check_dims(std::vector<std::string> &out, const char *name, const Gf2Matrix &m, size_t rows, size_t cols) {
  if (m.rows() != rows || m.cols() != cols) {
    out.push_back(std::string(name) + " has dimensions " + dims(m) + ", expected " + std::to_string(rows) + "x" +
                  std::to_string(cols));
  }
}

struct Line {
  size_t number;
  size_t offset;  // 0-based column of text[0] in the original line
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  size_t number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    number++;
    std::string_view line = text.substr(pos, end - pos);
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      size_t last = line.find_last_not_of(" \t\r");
      lines.push_back({number, first, line.substr(first, last - first + 1)});
    }
    if (end == text.size()) {
      break;
    }
    pos = end + 1;
  }
  return lines;
}

size_t parse_count(const Line &line, std::string_view keyword) {
  std::string_view t = line.text;
  if (t.substr(0, keyword.size()) != keyword || t.size() <= keyword.size() ||
      (t[keyword.size()] != ' ' && t[keyword.size()] != '\t')) {
    throw ParseError(line.number, line.offset + 1, "expected '" + std::string(keyword) + " <count>'");
  }
  size_t start = t.find_first_not_of(" \t", keyword.size());
  std::string_view num = t.substr(start);
  size_t value = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
  if (ec != std::errc() || ptr != num.data() + num.size()) {
    throw ParseError(line.number, line.offset + start + 1, "invalid count '" + std::string(num) + "'");
  }
  return value;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(content_lines(text)) {
  }

  AnyCode parse() {
    const Line &header = next("missing header 'CPC split' or 'CPC general'");
    bool split;
    if (header.text == "CPC split") {
      split = true;
    } else if (header.text == "CPC general") {
      split = false;
    } else {
      throw ParseError(header.number, header.offset + 1, "malformed header '" + std::string(header.text) + "'");
    }
    size_t k = parse_count(next("missing 'data <k>'"), "data");
    if (split) {
      size_t nb = parse_count(next("missing 'bit <n_b>'"), "bit");
      size_t np = parse_count(next("missing 'phase <n_p>'"), "phase");
      CpcCode code;
      code.k = k;
      code.n_b = nb;
      code.n_p = np;
      code.mb = section("B", k, nb);
      code.mp = section("P", k, np);
      code.mc = section("C", nb, np);
      finish();
      return code;
    }
    size_t nc = parse_count(next("missing 'checks <n_c>'"), "checks");
    GeneralCpcCode code;
    code.k = k;
    code.n_c = nc;
    code.mbs = section("B", k, nc);
    code.mps = section("P", k, nc);
    code.mcs = section("C", nc, nc);
    for (size_t i = 0; i < nc; i++) {
      for (size_t j = 0; j <= i; j++) {
        if (code.mcs.get(i, j)) {
          const Line &row = *row_lines_[i];
          throw ParseError(row.number, row.offset + j + 1, "section C must be strictly upper triangular");
        }
      }
    }
    finish();
    return code;
  }

 private:
  const Line &next(const std::string &message) {
    if (pos_ >= lines_.size()) {
      size_t line = lines_.empty() ? 1 : lines_.back().number + 1;
      throw ParseError(line, 1, message);
    }
    return lines_[pos_++];
  }

  static bool is_section(std::string_view t) {
    return t == "B" || t == "P" || t == "C";
  }

  Gf2Matrix section(const char *name, size_t rows, size_t cols) {
    const Line &head = next(std::string("missing section '") + name + "'");
    if (head.text != name) {
      throw ParseError(head.number, head.offset + 1,
                       std::string("expected section '") + name + "', found '" + std::string(head.text) + "'");
    }
    Gf2Matrix m(rows, cols);
    size_t r = 0;
    row_lines_.clear();
    while (pos_ < lines_.size() && !is_section(lines_[pos_].text)) {
      const Line &line = lines_[pos_++];
      for (size_t c = 0; c < line.text.size(); c++) {
        char ch = line.text[c];
        if (ch != '0' && ch != '1') {
          throw ParseError(line.number, line.offset + c + 1, std::string("non-binary character '") + ch + "'");
        }
      }
      if (r >= rows || cols == 0) {
        throw ParseError(line.number, line.offset + 1,
                         std::string("section ") + name + " expects " + std::to_string(cols == 0 ? 0 : rows) + " rows");
      }
      if (line.text.size() != cols) {
        throw ParseError(line.number, line.offset + std::min(line.text.size(), cols) + 1,
                         "inconsistent row length " + std::to_string(line.text.size()) + ", expected " +
                             std::to_string(cols));
      }
      for (size_t c = 0; c < cols; c++) {
        m.set(r, c, line.text[c] == '1');
      }
      row_lines_.push_back(&line);
      r++;
    }
    if (cols != 0 && r != rows) {
      size_t at = pos_ < lines_.size() ? lines_[pos_].number : (lines_.empty() ? 1 : lines_.back().number + 1);
      throw ParseError(at, 1, std::string("section ") + name + " has " + std::to_string(r) + " rows, expected " +
                                  std::to_string(rows));
    }
    return m;
  }

  void finish() {
    if (pos_ < lines_.size()) {
      const Line &line = lines_[pos_];
      throw ParseError(line.number, line.offset + 1, "unexpected content '" + std::string(line.text) + "'");
    }
  }

  std::vector<Line> lines_;
  size_t pos_ = 0;
  // Source lines of the rows of the last parsed section.
  std::vector<const Line *> row_lines_;
};

void append_section(std::string &out, const char *name, const Gf2Matrix &m) {
  out += name;
  out += '\n';
  if (m.cols() != 0) {
    out += m.str();
  }
}

}  // namespace

bool ClassicalCode::operator==(const ClassicalCode &other) const {
  if (bit_count != other.bit_count || bit_labels != other.bit_labels || harmless != other.harmless ||
      checks.size() != other.checks.size()) {
    return false;
  }
  for (size_t k = 0; k < checks.size(); k++) {
    if (checks[k].label != other.checks[k].label || checks[k].bits != other.checks[k].bits) {
      return false;
    }
  }
  return true;
}

ParseError::ParseError(size_t line, size_t column, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {
}

std::vector<std::string> validate(const CpcCode &code) {
  std::vector<std::string> out;
  check_dims(out, "mb", code.mb, code.k, code.n_b);
  check_dims(out, "mp", code.mp, code.k, code.n_p);
  check_dims(out, "mc", code.mc, code.n_b, code.n_p);
  return out;
}

std::vector<std::string> validate(const GeneralCpcCode &code) {
  std::vector<std::string> out;
  check_dims(out, "mbs", code.mbs, code.k, code.n_c);
  check_dims(out, "mps", code.mps, code.k, code.n_c);
  check_dims(out, "mcs", code.mcs, code.n_c, code.n_c);
  for (size_t i = 0; i < code.mcs.rows(); i++) {
    for (size_t j = 0; j <= i && j < code.mcs.cols(); j++) {
      if (code.mcs.get(i, j)) {
        out.push_back("mcs is not strictly upper triangular (entry " + std::to_string(i) + "," + std::to_string(j) +
                      ")");
        return out;
      }
    }
  }
  return out;
}

std::vector<std::string> validate(const AnyCode &code) {
  return std::visit([](const auto &c) { return validate(c); }, code);
}

namespace {

template <typename T>
void require_valid_impl(const T &code) {
  auto violations = validate(code);
  if (!violations.empty()) {
    std::string message = "invalid code:";
    for (const auto &v : violations) {
      message += " " + v + ";";
    }
    throw std::invalid_argument(message);
  }
}

}  // namespace

void require_valid(const CpcCode &code) {
  require_valid_impl(code);
}

void require_valid(const GeneralCpcCode &code) {
  require_valid_impl(code);
}

AnyCode parse_code(std::string_view text) {
  return Parser(text).parse();
}

std::string serialize(const CpcCode &code) {
  std::string out = "CPC split\n";
  out += "data " + std::to_string(code.k) + "\n";
  out += "bit " + std::to_string(code.n_b) + "\n";
  out += "phase " + std::to_string(code.n_p) + "\n";
  append_section(out, "B", code.mb);
  append_section(out, "P", code.mp);
  append_section(out, "C", code.mc);
  return out;
}

std::string serialize(const GeneralCpcCode &code) {
  std::string out = "CPC general\n";
  out += "data " + std::to_string(code.k) + "\n";
  out += "checks " + std::to_string(code.n_c) + "\n";
  append_section(out, "B", code.mbs);
  append_section(out, "P", code.mps);
  append_section(out, "C", code.mcs);
  return out;
}

std::string serialize(const AnyCode &code) {
  return std::visit([](const auto &c) { return serialize(c); }, code);
}

AnyCode load_code_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_code(buffer.str());
}

CpcCode make_code(const Gf2Matrix &mb, const Gf2Matrix &mp, const Gf2Matrix &mc) {
  CpcCode code;
  code.k = mb.rows();
  code.n_b = mb.cols();
  code.n_p = mp.cols();
  code.mb = mb;
  code.mp = mp;
  code.mc = mc;
  require_valid(code);
  return code;
}

GeneralCpcCode make_general_code(const Gf2Matrix &mbs, const Gf2Matrix &mps, const Gf2Matrix &mcs) {
  GeneralCpcCode code;
  code.k = mbs.rows();
  code.n_c = mbs.cols();
  code.mbs = mbs;
  code.mps = mps;
  code.mcs = mcs;
  require_valid(code);
  return code;
}

CpcCode from_classical(const Gf2Matrix &h_bit, const Gf2Matrix &h_phase, const Gf2Matrix &mc) {
  if (h_bit.rows() != h_phase.rows()) {
    throw std::invalid_argument("from_classical: h_bit has " + std::to_string(h_bit.rows()) + " rows but h_phase has " +
                                std::to_string(h_phase.rows()));
  }
  if (mc.rows() != h_bit.cols() || mc.cols() != h_phase.cols()) {
    throw std::invalid_argument("from_classical: mc has dimensions " + dims(mc) + ", expected " +
                                std::to_string(h_bit.cols()) + "x" + std::to_string(h_phase.cols()));
  }
  return make_code(h_bit, h_phase, mc);
}

GeneralCpcCode generalize(const CpcCode &code) {
  require_valid(code);
  GeneralCpcCode g;
  g.k = code.k;
  g.n_c = code.n_b + code.n_p;
  g.mbs = Gf2Matrix(code.k, g.n_c);
  g.mps = Gf2Matrix(code.k, g.n_c);
  g.mcs = Gf2Matrix(g.n_c, g.n_c);
  for (size_t d = 0; d < code.k; d++) {
    for (size_t b = 0; b < code.n_b; b++) {
      g.mbs.set(d, b, code.mb.get(d, b));
    }
    for (size_t p = 0; p < code.n_p; p++) {
      g.mps.set(d, code.n_b + p, code.mp.get(d, p));
    }
  }
  for (size_t b = 0; b < code.n_b; b++) {
    for (size_t p = 0; p < code.n_p; p++) {
      g.mcs.set(b, code.n_b + p, code.mc.get(b, p));
    }
  }
  return g;
}

std::vector<std::string> qubit_labels(const CpcCode &code) {
  std::vector<std::string> labels;
  for (size_t j = 0; j < code.k; j++) {
    labels.push_back("d" + std::to_string(j + 1));
  }
  for (size_t j = 0; j < code.n_b; j++) {
    labels.push_back("b" + std::to_string(j + 1));
  }
  for (size_t j = 0; j < code.n_p; j++) {
    labels.push_back("p" + std::to_string(j + 1));
  }
  return labels;
}

std::vector<std::string> qubit_labels(const GeneralCpcCode &code) {
  std::vector<std::string> labels;
  for (size_t j = 0; j < code.k; j++) {
    labels.push_back("d" + std::to_string(j + 1));
  }
  for (size_t j = 0; j < code.n_c; j++) {
    labels.push_back("c" + std::to_string(j + 1));
  }
  return labels;
}

std::vector<std::string> qubit_labels(const AnyCode &code) {
  return std::visit([](const auto &c) { return qubit_labels(c); }, code);
}

size_t data_count(const AnyCode &code) {
  return std::visit([](const auto &c) { return c.k; }, code);
}

size_t qubit_count(const AnyCode &code) {
  return std::visit([](const auto &c) { return c.qubit_count(); }, code);
}

}  // namespace cpc
