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

#include "cpc/gf2.h"

#include <bit>
#include <stdexcept>
#include <utility>

namespace cpc {

Gf2Matrix::Gf2Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), words_(rows * ((cols + 63) / 64), 0) {
}

Gf2Matrix Gf2Matrix::identity(size_t n) {
  Gf2Matrix result(n, n);
  for (size_t k = 0; k < n; k++) {
    result.set(k, k, true);
  }
  return result;
}

Gf2Matrix Gf2Matrix::from_strings(const std::vector<std::string> &rows, size_t cols_if_empty) {
  size_t cols = rows.empty() ? cols_if_empty : rows[0].size();
  Gf2Matrix result(rows.size(), cols);
  for (size_t r = 0; r < rows.size(); r++) {
    if (rows[r].size() != cols) {
      throw std::invalid_argument("row " + std::to_string(r) + " has length " + std::to_string(rows[r].size()) +
                                  ", expected " + std::to_string(cols));
    }
    for (size_t c = 0; c < cols; c++) {
      char ch = rows[r][c];
      if (ch != '0' && ch != '1') {
        throw std::invalid_argument("non-binary character in row " + std::to_string(r));
      }
      result.set(r, c, ch == '1');
    }
  }
  return result;
}

bool Gf2Matrix::get(size_t r, size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw std::out_of_range("Gf2Matrix index out of range");
  }
  return (words_[r * words_per_row() + c / 64] >> (c % 64)) & 1;
}

void Gf2Matrix::set(size_t r, size_t c, bool value) {
  if (r >= rows_ || c >= cols_) {
    throw std::out_of_range("Gf2Matrix index out of range");
  }
  uint64_t &w = words_[r * words_per_row() + c / 64];
  uint64_t bit = uint64_t{1} << (c % 64);
  w = value ? (w | bit) : (w & ~bit);
}

void Gf2Matrix::flip(size_t r, size_t c) {
  set(r, c, !get(r, c));
}

uint64_t Gf2Matrix::row_mask(size_t r) const {
  if (cols_ > 64) {
    throw std::invalid_argument("row_mask requires at most 64 columns");
  }
  if (r >= rows_) {
    throw std::out_of_range("Gf2Matrix row out of range");
  }
  return cols_ == 0 ? 0 : words_[r];
}

void Gf2Matrix::set_row_mask(size_t r, uint64_t mask) {
  if (cols_ > 64) {
    throw std::invalid_argument("set_row_mask requires at most 64 columns");
  }
  if (r >= rows_) {
    throw std::out_of_range("Gf2Matrix row out of range");
  }
  if (cols_ == 0) {
    return;
  }
  if (cols_ < 64) {
    mask &= (uint64_t{1} << cols_) - 1;
  }
  words_[r] = mask;
}

void Gf2Matrix::xor_row(size_t dst, size_t src) {
  size_t w = words_per_row();
  for (size_t k = 0; k < w; k++) {
    words_[dst * w + k] ^= words_[src * w + k];
  }
}

void Gf2Matrix::swap_rows(size_t a, size_t b) {
  size_t w = words_per_row();
  for (size_t k = 0; k < w; k++) {
    std::swap(words_[a * w + k], words_[b * w + k]);
  }
}

bool Gf2Matrix::row_is_zero(size_t r) const {
  size_t w = words_per_row();
  for (size_t k = 0; k < w; k++) {
    if (words_[r * w + k]) {
      return false;
    }
  }
  return true;
}

bool Gf2Matrix::is_zero() const {
  for (uint64_t w : words_) {
    if (w) {
      return false;
    }
  }
  return true;
}

size_t Gf2Matrix::row_weight(size_t r) const {
  size_t w = words_per_row();
  size_t total = 0;
  for (size_t k = 0; k < w; k++) {
    total += std::popcount(words_[r * w + k]);
  }
  return total;
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix result(cols_, rows_);
  for (size_t r = 0; r < rows_; r++) {
    for (size_t c = 0; c < cols_; c++) {
      if (get(r, c)) {
        result.set(c, r, true);
      }
    }
  }
  return result;
}

Gf2Matrix Gf2Matrix::select_columns(const std::vector<size_t> &cols) const {
  Gf2Matrix result(rows_, cols.size());
  for (size_t r = 0; r < rows_; r++) {
    for (size_t k = 0; k < cols.size(); k++) {
      result.set(r, k, get(r, cols[k]));
    }
  }
  return result;
}

Gf2Matrix Gf2Matrix::select_rows(const std::vector<size_t> &rows) const {
  Gf2Matrix result(rows.size(), cols_);
  size_t w = words_per_row();
  for (size_t k = 0; k < rows.size(); k++) {
    if (rows[k] >= rows_) {
      throw std::out_of_range("Gf2Matrix row out of range");
    }
    for (size_t j = 0; j < w; j++) {
      result.words_[k * w + j] = words_[rows[k] * w + j];
    }
  }
  return result;
}

std::vector<std::string> Gf2Matrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_);
  for (size_t r = 0; r < rows_; r++) {
    std::string line(cols_, '0');
    for (size_t c = 0; c < cols_; c++) {
      if (get(r, c)) {
        line[c] = '1';
      }
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::string Gf2Matrix::str() const {
  std::string out;
  for (const auto &line : to_strings()) {
    out += line;
    out += '\n';
  }
  return out;
}

bool Gf2Matrix::operator==(const Gf2Matrix &other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && words_ == other.words_;
}

Gf2Matrix multiply(const Gf2Matrix &a, const Gf2Matrix &b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("multiply: dimension mismatch (" + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + ")");
  }
  Gf2Matrix result(a.rows(), b.cols());
  for (size_t r = 0; r < a.rows(); r++) {
    for (size_t k = 0; k < a.cols(); k++) {
      if (a.get(r, k)) {
        for (size_t c = 0; c < b.cols(); c++) {
          if (b.get(k, c)) {
            result.flip(r, c);
          }
        }
      }
    }
  }
  return result;
}

Gf2Matrix add(const Gf2Matrix &a, const Gf2Matrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("add: dimension mismatch");
  }
  Gf2Matrix result = a;
  for (size_t r = 0; r < a.rows(); r++) {
    for (size_t c = 0; c < a.cols(); c++) {
      if (b.get(r, c)) {
        result.flip(r, c);
      }
    }
  }
  return result;
}

Gf2Matrix hstack(const Gf2Matrix &a, const Gf2Matrix &b) {
  if (a.rows() != b.rows()) {
    throw std::invalid_argument("hstack: row count mismatch");
  }
  Gf2Matrix result(a.rows(), a.cols() + b.cols());
  for (size_t r = 0; r < a.rows(); r++) {
    for (size_t c = 0; c < a.cols(); c++) {
      result.set(r, c, a.get(r, c));
    }
    for (size_t c = 0; c < b.cols(); c++) {
      result.set(r, a.cols() + c, b.get(r, c));
    }
  }
  return result;
}

Gf2Matrix vstack(const Gf2Matrix &a, const Gf2Matrix &b) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument("vstack: column count mismatch");
  }
  Gf2Matrix result(a.rows() + b.rows(), a.cols());
  for (size_t c = 0; c < a.cols(); c++) {
    for (size_t r = 0; r < a.rows(); r++) {
      result.set(r, c, a.get(r, c));
    }
    for (size_t r = 0; r < b.rows(); r++) {
      result.set(a.rows() + r, c, b.get(r, c));
    }
  }
  return result;
}

RrefResult rref(const Gf2Matrix &a) {
  RrefResult out;
  out.reduced = a;
  out.transform = Gf2Matrix::identity(a.rows());
  Gf2Matrix &m = out.reduced;
  Gf2Matrix &t = out.transform;
  size_t pivot_row = 0;
  for (size_t c = 0; c < m.cols() && pivot_row < m.rows(); c++) {
    size_t found = pivot_row;
    while (found < m.rows() && !m.get(found, c)) {
      found++;
    }
    if (found == m.rows()) {
      continue;
    }
    m.swap_rows(pivot_row, found);
    t.swap_rows(pivot_row, found);
    for (size_t r = 0; r < m.rows(); r++) {
      if (r != pivot_row && m.get(r, c)) {
        m.xor_row(r, pivot_row);
        t.xor_row(r, pivot_row);
      }
    }
    out.pivots.push_back(c);
    pivot_row++;
  }
  out.rank = out.pivots.size();
  return out;
}

size_t rank(const Gf2Matrix &a) {
  return rref(a).rank;
}

bool row_space_equal(const Gf2Matrix &a, const Gf2Matrix &b) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument("row_space_equal: column count mismatch");
  }
  RrefResult ra = rref(a);
  RrefResult rb = rref(b);
  if (ra.rank != rb.rank) {
    return false;
  }
  for (size_t r = 0; r < ra.rank; r++) {
    for (size_t c = 0; c < a.cols(); c++) {
      if (ra.reduced.get(r, c) != rb.reduced.get(r, c)) {
        return false;
      }
    }
  }
  return true;
}

bool in_row_space(const Gf2Matrix &a, const std::vector<bool> &row) {
  if (row.size() != a.cols()) {
    throw std::invalid_argument("in_row_space: column count mismatch");
  }
  RrefResult ra = rref(a);
  std::vector<bool> v = row;
  for (size_t r = 0; r < ra.rank; r++) {
    size_t p = ra.pivots[r];
    if (v[p]) {
      for (size_t c = 0; c < a.cols(); c++) {
        v[c] = v[c] != ra.reduced.get(r, c);
      }
    }
  }
  for (bool bit : v) {
    if (bit) {
      return false;
    }
  }
  return true;
}

}  // namespace cpc
