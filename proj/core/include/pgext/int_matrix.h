// Copyright 2026 The pgext Authors
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

#ifndef PGEXT_INT_MATRIX_H_
#define PGEXT_INT_MATRIX_H_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pgext {

using Integer = mpz_class;

// Dense matrix of arbitrary-precision integers, row-major.  Either dimension
// may be zero.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  // Rows must all have the same length.
  IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

  static IntMatrix Identity(std::size_t n);
  static IntMatrix Diagonal(const std::vector<Integer>& diagonal);
  static IntMatrix FromRows(const std::vector<std::vector<Integer>>& rows,
                            std::size_t cols_if_empty = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<Integer>& entries() const { return entries_; }

  IntMatrix Transposed() const;
  bool IsZero() const;

  // Elementary operations, used by the normal-form routines.
  void SwapRows(std::size_t a, std::size_t b);
  void SwapCols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void AddRowMultiple(std::size_t dst, std::size_t src, const Integer& factor);
  // col[dst] += factor * col[src]
  void AddColMultiple(std::size_t dst, std::size_t src, const Integer& factor);
  void NegateRow(std::size_t r);

  std::string ToString() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);

// Exact determinant by fraction-free (Bareiss) elimination.  The determinant
// of a 0x0 matrix is 1.
Integer Determinant(const IntMatrix& m);

// p^k as an arbitrary-precision integer.
Integer Power(std::int64_t p, int k);

// Least non-negative residue of a modulo m (m > 0).
Integer Mod(const Integer& a, const Integer& m);

// Largest k with p^k | n.  Rejects n == 0 and p < 2.
int PValuation(const Integer& n, std::int64_t p);

}  // namespace pgext

#endif  // PGEXT_INT_MATRIX_H_
