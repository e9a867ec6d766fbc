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

#ifndef PGEXT_EXTENSION_H_
#define PGEXT_EXTENSION_H_

#include <cstdint>
#include <vector>

#include "pgext/abelian.h"
#include "pgext/int_matrix.h"

namespace pgext {

// An extension 0 -> G_lambda -> E -> G_mu -> 0 of abelian p-groups, given by
// the lift relations
//
//   p^{mu_j} x~_j = sum_i a(j, i) y_i,
//
// where y_1..y_l generate G_lambda and x~_1..x~_m lift the generators of
// G_mu.  `a` is m x l: rows follow mu, columns follow lambda.
struct ExtensionData {
  std::int64_t p = 2;
  PGroupType lambda;
  PGroupType mu;
  IntMatrix a;
  // Set by Normalize(): every entry is the least non-negative residue modulo
  // p^{min(lambda_i, mu_j)}.
  bool normalized = false;

  std::size_t l() const { return lambda.length(); }
  std::size_t m() const { return mu.length(); }

  // Equality compares the data, not the normalized flag.
  friend bool operator==(const ExtensionData& x, const ExtensionData& y) {
    return x.p == y.p && x.lambda == y.lambda && x.mu == y.mu && x.a == y.a;
  }
};

// Throws kNotPrime, kPartitionNotPositive, kPartitionNotDecreasing or
// kShapeMismatch.
void Validate(const ExtensionData& ext);

// m x l matrix with entry (j, i) = p^{min(lambda_i, mu_j)}.
IntMatrix ModulusMatrix(std::int64_t p, const PGroupType& lambda,
                        const PGroupType& mu);

// Reduces every entry to its canonical residue.  Idempotent.
ExtensionData Normalize(const ExtensionData& ext);

// The (l+m) x (l+m) relation matrix [[diag(p^lambda), 0], [A, diag(p^mu)]]
// acting on the column (y_1..y_l, x~_1..x~_m).
IntMatrix PresentationMatrix(const ExtensionData& ext);

// Type of the middle group E.
PGroupType MiddleType(const ExtensionData& ext);

// Re-chooses the lifts x~_j -> x~_j + sum_i c(j, i) y_i, which shifts row j
// of A by p^{mu_j} c(j, .).
ExtensionData ChangeLift(const ExtensionData& ext, const IntMatrix& c);

inline constexpr std::uint64_t kDefaultMaxExtensions = 100'000;

// Number of normalized coefficient matrices for (p, lambda, mu), i.e. the
// product of the modulus matrix entries.
Integer ExtensionCount(std::int64_t p, const PGroupType& lambda,
                       const PGroupType& mu);

// Position of a normalized A in the lexicographic order of its row-major
// entries, and the inverse map.  These index every normalized extension of a
// fixed (p, lambda, mu) by 0 <= index < ExtensionCount().
std::uint64_t ExtensionIndex(const ExtensionData& normalized);
ExtensionData ExtensionAt(std::int64_t p, const PGroupType& lambda,
                          const PGroupType& mu, std::uint64_t index);

// All normalized extensions in lexicographic order.  Throws kBoundExceeded
// past max_total.
std::vector<ExtensionData> EnumerateExtensions(
    std::int64_t p, const PGroupType& lambda, const PGroupType& mu,
    std::uint64_t max_total = kDefaultMaxExtensions);

}  // namespace pgext

#endif  // PGEXT_EXTENSION_H_
