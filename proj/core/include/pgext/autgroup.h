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

#ifndef PGEXT_AUTGROUP_H_
#define PGEXT_AUTGROUP_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "pgext/abelian.h"
#include "pgext/int_matrix.h"

namespace pgext {

inline constexpr std::uint64_t kDefaultMaxAutCandidates = 1'000'000;

// Matrix of an automorphism of (+)_i Z/p^{tau_i}: column j holds the image of
// generator j, and entry (i, j) is kept modulo p^{tau_i}.
//
// Such a matrix is an automorphism exactly when p^{max(0, tau_i - tau_j)}
// divides entry (i, j) and the determinant is prime to p.
struct AutMatrix {
  std::int64_t p = 2;
  PGroupType tau;
  IntMatrix m;

  friend bool operator==(const AutMatrix&, const AutMatrix&) = default;
};

// Throws kShapeMismatch unless m is tau.length() square.
bool IsValidAut(const IntMatrix& m, std::int64_t p, const PGroupType& tau);

// Row i reduced modulo p^{tau_i}.
IntMatrix ReduceAut(const IntMatrix& m, std::int64_t p, const PGroupType& tau);

AutMatrix IdentityAut(std::int64_t p, const PGroupType& tau);

// Composition a * b, reduced.
AutMatrix Compose(const AutMatrix& a, const AutMatrix& b);

// Number of reduced matrices satisfying the divisibility pattern; this is the
// space AutEnumerator scans.
Integer AutCandidateCount(std::int64_t p, const PGroupType& tau);

// Streams the valid reduced matrices in lexicographic order of their
// row-major entries.  Independent instances never share state.
class AutEnumerator {
 public:
  // Throws kBoundExceeded if the candidate space exceeds max_candidates.
  AutEnumerator(std::int64_t p, PGroupType tau,
                std::uint64_t max_candidates = kDefaultMaxAutCandidates);

  std::optional<AutMatrix> Next();

 private:
  bool Advance();

  std::int64_t p_;
  PGroupType tau_;
  std::vector<Integer> step_;   // p^{max(0, tau_i - tau_j)} per entry
  std::vector<Integer> limit_;  // p^{tau_i} per entry
  IntMatrix current_;
  bool exhausted_ = false;
};

std::vector<AutMatrix> EnumerateAuts(
    std::int64_t p, const PGroupType& tau,
    std::uint64_t max_candidates = kDefaultMaxAutCandidates);

// G^ = p^{-mu} G p^{mu}, i.e. G^(k, j) = p^{mu_j - mu_k} G(k, j).  Integral
// because of the divisibility pattern; throws kInvalidArgument otherwise.
IntMatrix ConjugateByPPowers(const IntMatrix& g, std::int64_t p,
                             const PGroupType& mu);
inline IntMatrix ConjugateByPPowers(const AutMatrix& g) {
  return ConjugateByPPowers(g.m, g.p, g.tau);
}

}  // namespace pgext

#endif  // PGEXT_AUTGROUP_H_
