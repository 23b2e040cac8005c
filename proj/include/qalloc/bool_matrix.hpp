// Copyright 2026 The qalloc Authors
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

#ifndef QALLOC_BOOL_MATRIX_HPP
#define QALLOC_BOOL_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "qalloc/errors.hpp"

namespace qalloc {

/// Dense row-major 0/1 matrix.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(std::size_t rows, std::size_t cols, bool fill = false)
      : rows_(rows), cols_(cols), data_(rows * cols, fill ? 1 : 0) {}

  /// Builds from nested rows of 0/1 values; throws ShapeError on ragged input
  /// and ValidationError on entries other than 0 or 1.
  static BoolMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    BoolMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) {
        throw ShapeError("row " + std::to_string(i) + " has " +
                         std::to_string(rows[i].size()) + " entries, expected " +
                         std::to_string(m.cols_));
      }
      for (std::size_t j = 0; j < m.cols_; ++j) {
        const int v = rows[i][j];
        if (v != 0 && v != 1) {
          throw ValidationError("entry (" + std::to_string(i) + "," +
                                std::to_string(j) + ") is " +
                                std::to_string(v) + ", expected 0 or 1");
        }
        m.set(i, j, v == 1);
      }
    }
    return m;
  }
  static BoolMatrix from_rows(
      std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<int>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  bool operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j] != 0;
  }
  /// Bounds-checked read.
  bool at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
      throw DomainError("matrix index (" + std::to_string(i) + "," +
                        std::to_string(j) + ") out of range");
    }
    return (*this)(i, j);
  }
  void set(std::size_t i, std::size_t j, bool v) {
    data_[i * cols_ + j] = v ? 1 : 0;
  }

  std::vector<std::vector<int>> to_rows() const {
    std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j) ? 1 : 0;
    return out;
  }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BoolMatrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      for (std::size_t j = 0; j < m.cols_; ++j) os << (m(i, j) ? '1' : '0');
      os << '\n';
    }
    return os;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

}  // namespace qalloc

#endif  // QALLOC_BOOL_MATRIX_HPP
