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

#include "pgext/abelian.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>
#include <utility>

#include "pgext/error.h"
#include "pgext/snf.h"

namespace pgext {

int PGroupType::total() const {
  int sum = 0;
  for (int part : parts) sum += part;
  return sum;
}

bool PGroupType::IsValid() const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return false;
    if (i > 0 && parts[i - 1] < parts[i]) return false;
  }
  return true;
}

std::string PGroupType::ToString() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ',';
    out << parts[i];
  }
  out << ')';
  return out.str();
}

void ValidateType(const PGroupType& type) {
  for (int part : type.parts) {
    if (part <= 0) {
      throw Error(ErrorCode::kPartitionNotPositive,
                  "partition " + type.ToString() + " has a non-positive part");
    }
  }
  for (std::size_t i = 1; i < type.parts.size(); ++i) {
    if (type.parts[i - 1] < type.parts[i]) {
      throw Error(ErrorCode::kPartitionNotDecreasing,
                  "partition " + type.ToString() + " is not weakly decreasing");
    }
  }
}

PGroupType MakeType(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  PGroupType type{std::move(parts)};
  ValidateType(type);
  return type;
}

bool IsPrime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// ExplicitGroup

ExplicitGroup::ExplicitGroup(std::vector<std::int64_t> factor_orders,
                             std::vector<Element> generator_images)
    : factor_orders_(std::move(factor_orders)),
      generator_images_(std::move(generator_images)) {
  for (std::int64_t n : factor_orders_) {
    if (n <= 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cyclic factor orders must exceed 1");
    }
  }
  for (const Element& g : generator_images_) {
    if (!Contains(g)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "generator image outside the canonical range");
    }
  }
}

Integer ExplicitGroup::order() const {
  Integer n = 1;
  for (std::int64_t f : factor_orders_) n *= static_cast<long>(f);
  return n;
}

void ExplicitGroup::CheckArity(const Element& x) const {
  if (x.size() != rank()) {
    throw Error(ErrorCode::kShapeMismatch,
                "element has " + std::to_string(x.size()) +
                    " coordinates, group has " + std::to_string(rank()) +
                    " factors");
  }
}

bool ExplicitGroup::Contains(const Element& x) const {
  if (x.size() != rank()) return false;
  for (std::size_t k = 0; k < rank(); ++k) {
    if (x[k] < 0 || x[k] >= factor_orders_[k]) return false;
  }
  return true;
}

Element ExplicitGroup::Add(const Element& a, const Element& b) const {
  CheckArity(a);
  CheckArity(b);
  Element out(rank());
  for (std::size_t k = 0; k < rank(); ++k) {
    out[k] = (a[k] + b[k]) % factor_orders_[k];
  }
  return out;
}

Element ExplicitGroup::Negate(const Element& a) const {
  CheckArity(a);
  Element out(rank());
  for (std::size_t k = 0; k < rank(); ++k) {
    out[k] = a[k] == 0 ? 0 : factor_orders_[k] - a[k];
  }
  return out;
}

std::int64_t ExplicitGroup::ElementOrder(const Element& x) const {
  CheckArity(x);
  std::int64_t order = 1;
  for (std::size_t k = 0; k < rank(); ++k) {
    const std::int64_t component =
        factor_orders_[k] / std::gcd(factor_orders_[k], x[k]);
    order = std::lcm(order, component);
  }
  return order;
}

std::uint64_t ExplicitGroup::IndexOf(const Element& x) const {
  CheckArity(x);
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < rank(); ++k) {
    index = index * static_cast<std::uint64_t>(factor_orders_[k]) +
            static_cast<std::uint64_t>(x[k]);
  }
  return index;
}

Element ExplicitGroup::ElementAt(std::uint64_t index) const {
  Element x(rank());
  for (std::size_t k = rank(); k-- > 0;) {
    const auto n = static_cast<std::uint64_t>(factor_orders_[k]);
    x[k] = static_cast<std::int64_t>(index % n);
    index /= n;
  }
  return x;
}

std::vector<Element> ExplicitGroup::AllElements(std::int64_t max_order) const {
  if (order() > max_order) {
    throw Error(ErrorCode::kBoundExceeded,
                "group order " + order().get_str() + " exceeds bound " +
                    std::to_string(max_order));
  }
  const std::uint64_t n = order().get_ui();
  std::vector<Element> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(ElementAt(i));
  return out;
}

Element ModuleAction(const Integer& n, const Element& x,
                     const ExplicitGroup& group) {
  if (x.size() != group.rank()) {
    throw Error(ErrorCode::kShapeMismatch, "element arity mismatch");
  }
  Element out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const Integer modulus = static_cast<long>(group.factor_orders()[k]);
    const Integer v = Mod(n * static_cast<long>(x[k]), modulus);
    out[k] = v.get_si();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Primary decomposition

std::map<std::int64_t, PGroupType> PrimaryDecompose(
    std::span<const std::int64_t> orders) {
  std::map<std::int64_t, std::vector<int>> exponents;
  for (std::int64_t n : orders) {
    if (n <= 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cyclic factor order " + std::to_string(n) + " must exceed 1");
    }
    std::int64_t rest = n;
    for (std::int64_t d = 2; d <= rest / d; ++d) {
      int k = 0;
      while (rest % d == 0) {
        rest /= d;
        ++k;
      }
      if (k > 0) exponents[d].push_back(k);
    }
    if (rest > 1) exponents[rest].push_back(1);
  }
  std::map<std::int64_t, PGroupType> out;
  for (auto& [p, parts] : exponents) out.emplace(p, MakeType(std::move(parts)));
  return out;
}

// ---------------------------------------------------------------------------
// Cokernels and subgroups

ExplicitGroup CokernelGroup(const IntMatrix& relations,
                            std::size_t n_generators) {
  if (relations.cols() != n_generators) {
    throw Error(ErrorCode::kShapeMismatch,
                "relation matrix has " + std::to_string(relations.cols()) +
                    " columns, expected " + std::to_string(n_generators));
  }
  if (relations.rows() < n_generators) {
    throw Error(ErrorCode::kInfiniteGroup,
                "fewer relations than generators: cokernel is infinite");
  }
  const SNFResult snf = SmithNormalForm(relations);
  const std::vector<Integer> diagonal = snf.Diagonal();

  // Row vector e_i maps to e_i * V, which lands in Z^n / diag(d).
  std::vector<std::size_t> kept;
  std::vector<std::int64_t> orders;
  for (std::size_t k = 0; k < diagonal.size(); ++k) {
    if (diagonal[k] == 0) {
      throw Error(ErrorCode::kInfiniteGroup,
                  "zero invariant factor: cokernel is infinite");
    }
    if (diagonal[k] == 1) continue;
    if (!diagonal[k].fits_slong_p()) {
      throw Error(ErrorCode::kBoundExceeded,
                  "invariant factor " + diagonal[k].get_str() +
                      " is too large for explicit arithmetic");
    }
    kept.push_back(k);
    orders.push_back(diagonal[k].get_si());
  }

  std::vector<Element> images;
  images.reserve(n_generators);
  for (std::size_t i = 0; i < n_generators; ++i) {
    Element coords;
    coords.reserve(kept.size());
    for (std::size_t k : kept) {
      coords.push_back(Mod(snf.V(i, k), diagonal[k]).get_si());
    }
    images.push_back(std::move(coords));
  }
  return ExplicitGroup(std::move(orders), std::move(images));
}

std::set<Element> SubgroupGenerated(const ExplicitGroup& group,
                                    std::span<const Element> gens,
                                    std::int64_t max_order) {
  if (group.order() > max_order) {
    throw Error(ErrorCode::kBoundExceeded,
                "group order " + group.order().get_str() + " exceeds bound " +
                    std::to_string(max_order));
  }
  for (const Element& g : gens) {
    if (!group.Contains(g)) {
      throw Error(ErrorCode::kInvalidArgument, "generator not in group");
    }
  }
  std::set<Element> seen{group.Identity()};
  std::deque<Element> frontier{group.Identity()};
  while (!frontier.empty()) {
    const Element x = std::move(frontier.front());
    frontier.pop_front();
    for (const Element& g : gens) {
      Element y = group.Add(x, g);
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  return seen;
}

PGroupType PGroupTypeOf(const ExplicitGroup& group,
                        const std::set<Element>& subgroup, std::int64_t p) {
  // log_p #{x : p^k x = 0} = sum_i min(parts_i, k); successive differences
  // give the conjugate partition.
  std::vector<int> log_counts{0};
  for (int k = 1;; ++k) {
    const Integer pk = Power(p, k);
    std::size_t killed = 0;
    for (const Element& x : subgroup) {
      if (ModuleAction(pk, x, group) == group.Identity()) ++killed;
    }
    const int log_count = PValuation(Integer(static_cast<unsigned long>(killed)), p);
    if (Power(p, log_count) != static_cast<unsigned long>(killed)) {
      throw Error(ErrorCode::kInternal, "subgroup is not a p-group");
    }
    log_counts.push_back(log_count);
    if (killed == subgroup.size()) break;
    if (k > 64) throw Error(ErrorCode::kInternal, "subgroup is not a p-group");
  }
  std::vector<int> conjugate;
  for (std::size_t k = 1; k < log_counts.size(); ++k) {
    conjugate.push_back(log_counts[k] - log_counts[k - 1]);
  }
  std::vector<int> parts;
  const int length = conjugate.empty() ? 0 : conjugate.front();
  for (int i = 0; i < length; ++i) {
    int part = 0;
    for (int c : conjugate) {
      if (c > i) ++part;
    }
    parts.push_back(part);
  }
  return PGroupType{std::move(parts)};
}

}  // namespace pgext
