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

#ifndef PGEXT_ABELIAN_H_
#define PGEXT_ABELIAN_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "pgext/int_matrix.h"

namespace pgext {

// Default ceiling on the order of groups handled by explicit enumeration.
inline constexpr std::int64_t kDefaultMaxGroupOrder = 4096;

// Type of the abelian p-group (+)_i Z/p^{parts[i]}.  Parts are weakly
// decreasing and positive; the empty type is the trivial group.
struct PGroupType {
  std::vector<int> parts;

  std::size_t length() const { return parts.size(); }
  // Sum of the parts, i.e. log_p of the group order.
  int total() const;
  bool IsValid() const;
  std::string ToString() const;

  friend bool operator==(const PGroupType&, const PGroupType&) = default;
  friend auto operator<=>(const PGroupType&, const PGroupType&) = default;
};

// Throws kPartitionNotPositive or kPartitionNotDecreasing.
void ValidateType(const PGroupType& type);

// Sorts decreasing; all parts must be positive.
PGroupType MakeType(std::vector<int> parts);

bool IsPrime(std::int64_t n);

using Element = std::vector<std::int64_t>;

// A finite abelian group Z/n_1 x ... x Z/n_k with n_i > 1.  Elements are
// coordinate tuples with 0 <= e[i] < n_i.
//
// generator_images, when non-empty, maps each generator of the presentation
// the group was built from to its coordinates.
class ExplicitGroup {
 public:
  ExplicitGroup() = default;
  explicit ExplicitGroup(std::vector<std::int64_t> factor_orders,
                         std::vector<Element> generator_images = {});

  const std::vector<std::int64_t>& factor_orders() const {
    return factor_orders_;
  }
  const std::vector<Element>& generator_images() const {
    return generator_images_;
  }
  std::size_t rank() const { return factor_orders_.size(); }
  Integer order() const;

  bool Contains(const Element& x) const;
  Element Identity() const { return Element(rank(), 0); }
  Element Add(const Element& a, const Element& b) const;
  Element Negate(const Element& a) const;
  // Additive order of x.
  std::int64_t ElementOrder(const Element& x) const;

  // Mixed-radix index of an element, 0 <= index < order().  Requires the
  // order to fit in 64 bits.
  std::uint64_t IndexOf(const Element& x) const;
  Element ElementAt(std::uint64_t index) const;

  std::vector<Element> AllElements(
      std::int64_t max_order = kDefaultMaxGroupOrder) const;

 private:
  void CheckArity(const Element& x) const;

  std::vector<std::int64_t> factor_orders_;
  std::vector<Element> generator_images_;
};

// n * x under the Z-module action; negative n gives -(|n| x).
Element ModuleAction(const Integer& n, const Element& x,
                     const ExplicitGroup& group);

// Splits Z/n_1 x ... x Z/n_k into its Sylow p-parts, keyed by prime.
std::map<std::int64_t, PGroupType> PrimaryDecompose(
    std::span<const std::int64_t> orders);

// Z^n / (row lattice of relations) as canonical cyclic factors in invariant
// factor order.  Throws kInfiniteGroup if the quotient is infinite.
ExplicitGroup CokernelGroup(const IntMatrix& relations,
                            std::size_t n_generators);

// Closure of gens under addition.  Throws kBoundExceeded if |G| > max_order.
std::set<Element> SubgroupGenerated(
    const ExplicitGroup& group, std::span<const Element> gens,
    std::int64_t max_order = kDefaultMaxGroupOrder);

// Type of a finite abelian p-group given as a set of elements of `group`,
// read off from how many elements are killed by each p^k.
PGroupType PGroupTypeOf(const ExplicitGroup& group,
                        const std::set<Element>& subgroup, std::int64_t p);

}  // namespace pgext

#endif  // PGEXT_ABELIAN_H_
