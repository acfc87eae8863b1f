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

#ifndef CPC_GF2_H_
#define CPC_GF2_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cpc {

/// Dense matrix over GF(2) with bit-packed rows.
///
/// Empty shapes (0 rows and/or 0 columns) are valid values.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(size_t rows, size_t cols);

  static Gf2Matrix identity(size_t n);
  /// Builds a matrix from strings of '0'/'1'. All rows must have equal length.
  /// With no rows, the column count is `cols_if_empty`.
  static Gf2Matrix from_strings(const std::vector<std::string> &rows, size_t cols_if_empty = 0);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  bool get(size_t r, size_t c) const;
  void set(size_t r, size_t c, bool value);
  void flip(size_t r, size_t c);

  /// Row r as a mask of column bits. Requires cols() <= 64.
  uint64_t row_mask(size_t r) const;
  void set_row_mask(size_t r, uint64_t mask);

  /// rows[dst] ^= rows[src].
  void xor_row(size_t dst, size_t src);
  void swap_rows(size_t a, size_t b);
  bool row_is_zero(size_t r) const;
  bool is_zero() const;
  size_t row_weight(size_t r) const;

  Gf2Matrix transpose() const;
  Gf2Matrix select_columns(const std::vector<size_t> &cols) const;
  Gf2Matrix select_rows(const std::vector<size_t> &rows) const;

  /// Rows as '0'/'1' strings.
  std::vector<std::string> to_strings() const;
  /// One row per line, each terminated by '\n'.
  std::string str() const;

  bool operator==(const Gf2Matrix &other) const;
  bool operator!=(const Gf2Matrix &other) const { return !(*this == other); }

 private:
  size_t words_per_row() const { return (cols_ + 63) / 64; }

  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<uint64_t> words_;
};

Gf2Matrix multiply(const Gf2Matrix &a, const Gf2Matrix &b);
Gf2Matrix add(const Gf2Matrix &a, const Gf2Matrix &b);
Gf2Matrix hstack(const Gf2Matrix &a, const Gf2Matrix &b);
Gf2Matrix vstack(const Gf2Matrix &a, const Gf2Matrix &b);

struct RrefResult {
  Gf2Matrix reduced;
  std::vector<size_t> pivots;
  size_t rank = 0;
  /// Invertible row transform with transform * input == reduced.
  Gf2Matrix transform;
};

RrefResult rref(const Gf2Matrix &a);
size_t rank(const Gf2Matrix &a);

/// True iff the two matrices span the same row space.
bool row_space_equal(const Gf2Matrix &a, const Gf2Matrix &b);

/// True iff the row vector lies in the row space of `a`.
bool in_row_space(const Gf2Matrix &a, const std::vector<bool> &row);

}  // namespace cpc

#endif  // CPC_GF2_H_
