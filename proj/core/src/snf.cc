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

#include "pgext/snf.h"

#include <algorithm>
#include <optional>
#include <utility>

namespace pgext {
namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Nonzero entry of least absolute value in the trailing block starting at
// (t, t); ties go to the first in row-major order.
std::optional<Position> FindPivot(const IntMatrix& a, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i) {
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = Position{i, j};
        best_abs = std::move(v);
      }
    }
  }
  return best;
}

class Reducer {
 public:
  explicit Reducer(const IntMatrix& m)
      : d_(m),
        u_(IntMatrix::Identity(m.rows())),
        v_(IntMatrix::Identity(m.cols())) {}

  SNFResult Run() && {
    const std::size_t steps = std::min(d_.rows(), d_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!ReduceAt(t)) break;
    }
    return SNFResult{std::move(d_), std::move(u_), std::move(v_)};
  }

 private:
  void SwapRows(std::size_t a, std::size_t b) {
    d_.SwapRows(a, b);
    u_.SwapRows(a, b);
  }
  void SwapCols(std::size_t a, std::size_t b) {
    d_.SwapCols(a, b);
    v_.SwapCols(a, b);
  }
  void AddRow(std::size_t dst, std::size_t src, const Integer& f) {
    d_.AddRowMultiple(dst, src, f);
    u_.AddRowMultiple(dst, src, f);
  }
  void AddCol(std::size_t dst, std::size_t src, const Integer& f) {
    d_.AddColMultiple(dst, src, f);
    v_.AddColMultiple(dst, src, f);
  }

  // Clears row and column t and leaves d(t,t) dividing the trailing block.
  // Returns false once the trailing block is entirely zero.
  bool ReduceAt(std::size_t t) {
    for (;;) {
      const auto pivot = FindPivot(d_, t);
      if (!pivot) return false;
      SwapRows(t, pivot->row);
      SwapCols(t, pivot->col);

      bool clean = true;
      for (std::size_t i = t + 1; i < d_.rows(); ++i) {
        if (d_(i, t) == 0) continue;
        Integer q = d_(i, t) / d_(t, t);
        AddRow(i, t, -q);
        if (d_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d_.cols(); ++j) {
        if (d_(t, j) == 0) continue;
        Integer q = d_(t, j) / d_(t, t);
        AddCol(j, t, -q);
        if (d_(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and go again.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < d_.rows() && divides_all; ++i) {
        for (std::size_t j = t + 1; j < d_.cols(); ++j) {
          if (!mpz_divisible_p(d_(i, j).get_mpz_t(), d_(t, t).get_mpz_t())) {
            AddRow(t, i, 1);
            divides_all = false;
            break;
          }
        }
      }
      if (!divides_all) continue;

      if (d_(t, t) < 0) {
        d_.NegateRow(t);
        u_.NegateRow(t);
      }
      return true;
    }
  }

  IntMatrix d_;
  IntMatrix u_;
  IntMatrix v_;
};

}  // namespace

std::vector<Integer> SNFResult::Diagonal() const {
  std::vector<Integer> out;
  const std::size_t n = std::min(D.rows(), D.cols());
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(D(k, k));
  return out;
}

SNFResult SmithNormalForm(const IntMatrix& m) { return Reducer(m).Run(); }

}  // namespace pgext
