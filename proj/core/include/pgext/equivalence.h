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

#ifndef PGEXT_EQUIVALENCE_H_
#define PGEXT_EQUIVALENCE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "pgext/autgroup.h"
#include "pgext/extension.h"

namespace pgext {

// Automorphisms f of G_lambda and g of G_mu certifying that two extensions
// are equivalent.  The middle map is h = diag(F, G) on (y, x~).
struct Witness {
  AutMatrix f;
  AutMatrix g;
};

struct SearchOptions {
  // Ceiling on |Aut(G_lambda)| * |Aut(G_mu)|.
  std::uint64_t max_witnesses = 1'000'000;
  std::uint64_t max_aut_candidates = kDefaultMaxAutCandidates;
  // Reject early when the middle groups are not isomorphic.  A necessary
  // condition only; tests switch it off to exercise the full search.
  bool middle_type_filter = true;
};

// True iff F * A1^T == A2^T * G^ entrywise, position (i, j) taken modulo
// p^{min(lambda_i, mu_j)}, where G^ = ConjugateByPPowers(G).
bool IsWitness(const ExtensionData& ext1, const ExtensionData& ext2,
               const Witness& witness);

// Searches all (F, G) for a witness.  Returns the identity pair when the
// normalized inputs coincide; otherwise the first hit with G in
// lexicographic order and, for that G, the lexicographically first F.
//
// Throws kParameterMismatch when (p, lambda, mu) differ and kBoundExceeded
// when the witness space is too large.
std::optional<Witness> AreEquivalent(const ExtensionData& ext1,
                                     const ExtensionData& ext2,
                                     const SearchOptions& options = {});

// The extension with A^T replaced by F * A^T * G^, normalized.  Always
// equivalent to ext.
ExtensionData ApplyAutomorphisms(const ExtensionData& ext, const AutMatrix& f,
                                 const AutMatrix& g);

struct OrbitOptions {
  std::uint64_t max_total = kDefaultMaxExtensions;
  std::uint64_t max_aut_candidates = kDefaultMaxAutCandidates;
};

// Lexicographically least normalized member of the orbit of ext.
ExtensionData CanonicalForm(const ExtensionData& ext,
                            const OrbitOptions& options = {});

struct OrbitClass {
  ExtensionData representative;
  std::uint64_t orbit_size = 0;
  PGroupType middle_type;
};

struct OrbitClassification {
  std::uint64_t total = 0;
  // Ordered by representative; each representative is its orbit's minimum.
  std::vector<OrbitClass> classes;
};

OrbitClassification ClassifyAll(std::int64_t p, const PGroupType& lambda,
                                const PGroupType& mu,
                                const OrbitOptions& options = {});

}  // namespace pgext

#endif  // PGEXT_EQUIVALENCE_H_
