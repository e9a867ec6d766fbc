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

#ifndef PGEXT_ORACLE_H_
#define PGEXT_ORACLE_H_

#include <cstdint>
#include <set>
#include <vector>

#include "pgext/abelian.h"
#include "pgext/extension.h"

namespace pgext {

// An extension realized as a concrete group: `group` is the cokernel of the
// presentation matrix, `sub_gens` are the images of y_1..y_l (the embedded
// copy of G_lambda) and `quot_gens` those of the lifts x~_1..x~_m.
struct ExplicitExtension {
  std::int64_t p = 2;
  PGroupType lambda;
  PGroupType mu;
  ExplicitGroup group;
  std::vector<Element> sub_gens;
  std::vector<Element> quot_gens;

  std::set<Element> Subgroup(
      std::int64_t max_order = kDefaultMaxGroupOrder) const;
};

// Throws kBoundExceeded if the middle group is larger than max_order.
ExplicitExtension RealizeExtension(
    const ExtensionData& ext, std::int64_t max_order = kDefaultMaxGroupOrder);

// Type of E / <sub_gens>, from the cokernel of the canonical relations of E
// stacked with the subgroup generators.
PGroupType QuotientType(const ExplicitExtension& ext);

// Throws kInternal unless |E| = p^{|lambda|+|mu|}, the marked subgroup has
// type lambda and the quotient has type mu.
void CheckRealization(const ExplicitExtension& ext,
                      std::int64_t max_order = kDefaultMaxGroupOrder);

// True iff some isomorphism h: E1 -> E2 carries the marked subgroup of e1
// onto that of e2.  Brute force over images of the canonical generators of
// E1, keeping only partial maps that stay injective.
bool DiagramEquivalent(const ExplicitExtension& e1,
                       const ExplicitExtension& e2,
                       std::int64_t max_order = kDefaultMaxGroupOrder);

}  // namespace pgext

#endif  // PGEXT_ORACLE_H_
