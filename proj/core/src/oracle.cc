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

#include "pgext/oracle.h"

#include <string>
#include <utility>

#include "pgext/error.h"

namespace pgext {

std::set<Element> ExplicitExtension::Subgroup(std::int64_t max_order) const {
  return SubgroupGenerated(group, sub_gens, max_order);
}

ExplicitExtension RealizeExtension(const ExtensionData& ext,
                                   std::int64_t max_order) {
  Validate(ext);
  const Integer order = Power(ext.p, ext.lambda.total() + ext.mu.total());
  if (order > max_order) {
    throw Error(ErrorCode::kBoundExceeded,
                "middle group of order " + order.get_str() +
                    " exceeds bound " + std::to_string(max_order));
  }
  const std::size_t l = ext.l();
  ExplicitGroup group = CokernelGroup(PresentationMatrix(ext), l + ext.m());
  const auto& images = group.generator_images();
  ExplicitExtension out{ext.p, ext.lambda, ext.mu, group, {}, {}};
  out.sub_gens.assign(images.begin(), images.begin() + l);
  out.quot_gens.assign(images.begin() + l, images.end());
  return out;
}

PGroupType QuotientType(const ExplicitExtension& ext) {
  const std::size_t rank = ext.group.rank();
  IntMatrix relations(rank + ext.sub_gens.size(), rank);
  for (std::size_t k = 0; k < rank; ++k) {
    relations(k, k) = static_cast<long>(ext.group.factor_orders()[k]);
  }
  for (std::size_t s = 0; s < ext.sub_gens.size(); ++s) {
    for (std::size_t k = 0; k < rank; ++k) {
      relations(rank + s, k) = static_cast<long>(ext.sub_gens[s][k]);
    }
  }
  const ExplicitGroup quotient = CokernelGroup(relations, rank);
  const auto primary = PrimaryDecompose(quotient.factor_orders());
  if (primary.empty()) return PGroupType{};
  if (primary.size() != 1 || primary.begin()->first != ext.p) {
    throw Error(ErrorCode::kInternal, "quotient is not a p-group");
  }
  return primary.begin()->second;
}

void CheckRealization(const ExplicitExtension& ext, std::int64_t max_order) {
  const Integer expected = Power(ext.p, ext.lambda.total() + ext.mu.total());
  if (ext.group.order() != expected) {
    throw Error(ErrorCode::kInternal,
                "middle group has order " + ext.group.order().get_str() +
                    ", expected " + expected.get_str());
  }
  const std::set<Element> sub = ext.Subgroup(max_order);
  const PGroupType sub_type = PGroupTypeOf(ext.group, sub, ext.p);
  if (sub_type != ext.lambda) {
    throw Error(ErrorCode::kInternal, "marked subgroup has type " +
                                          sub_type.ToString() + ", expected " +
                                          ext.lambda.ToString());
  }
  const PGroupType quotient = QuotientType(ext);
  if (quotient != ext.mu) {
    throw Error(ErrorCode::kInternal, "quotient has type " +
                                          quotient.ToString() + ", expected " +
                                          ext.mu.ToString());
  }
}

namespace {

// Depth-first search for an injective homomorphism E1 -> E2 sending the
// marked subgroup onto the marked subgroup.  Elements of E2 are handled by
// mixed-radix index.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const ExplicitExtension& e1, const ExplicitExtension& e2,
                    std::int64_t max_order)
      : e1_(e1),
        e2_(e2),
        elements_(e2.group.AllElements(max_order)),
        sub1_(e1.Subgroup(max_order)),
        sub2_(e2.Subgroup(max_order)) {}

  bool Run() {
    if (e1_.group.order() != e2_.group.order()) return false;
    if (sub1_.size() != sub2_.size()) return false;
    in_span_.assign(elements_.size(), false);
    in_span_[0] = true;
    span_ = {0};
    return Extend(0);
  }

 private:
  std::uint64_t AddIndex(std::uint64_t a, std::uint64_t b) const {
    return e2_.group.IndexOf(e2_.group.Add(elements_[a], elements_[b]));
  }

  bool Extend(std::size_t k) {
    const auto& orders = e1_.group.factor_orders();
    if (k == orders.size()) return MapsSubgroupOnto();
    const Integer d = static_cast<long>(orders[k]);
    for (std::uint64_t x = 0; x < elements_.size(); ++x) {
      if (ModuleAction(d, elements_[x], e2_.group) != e2_.group.Identity()) {
        continue;
      }
      // <images so far> + <x> must have |span| * d elements.
      std::vector<std::uint64_t> added;
      bool injective = true;
      std::uint64_t multiple = 0;
      for (std::int64_t j = 1; j < orders[k] && injective; ++j) {
        multiple = AddIndex(multiple, x);
        for (std::uint64_t s : span_) {
          const std::uint64_t y = AddIndex(s, multiple);
          if (in_span_[y]) {
            injective = false;
            break;
          }
          in_span_[y] = true;
          added.push_back(y);
        }
      }
      if (injective) {
        const std::size_t old_size = span_.size();
        span_.insert(span_.end(), added.begin(), added.end());
        images_.push_back(x);
        if (Extend(k + 1)) return true;
        images_.pop_back();
        span_.resize(old_size);
      }
      for (std::uint64_t y : added) in_span_[y] = false;
    }
    return false;
  }

  bool MapsSubgroupOnto() const {
    for (const Element& s : sub1_) {
      std::uint64_t image = 0;
      for (std::size_t k = 0; k < s.size(); ++k) {
        const Element part =
            ModuleAction(s[k], elements_[images_[k]], e2_.group);
        image = AddIndex(image, e2_.group.IndexOf(part));
      }
      if (!sub2_.contains(elements_[image])) return false;
    }
    // Injective and |sub1| == |sub2|, so the image is all of sub2.
    return true;
  }

  const ExplicitExtension& e1_;
  const ExplicitExtension& e2_;
  std::vector<Element> elements_;
  std::set<Element> sub1_;
  std::set<Element> sub2_;
  std::vector<std::uint64_t> images_;
  std::vector<std::uint64_t> span_;
  std::vector<bool> in_span_;
};

}  // namespace

bool DiagramEquivalent(const ExplicitExtension& e1,
                       const ExplicitExtension& e2, std::int64_t max_order) {
  if (e1.p != e2.p || e1.lambda != e2.lambda || e1.mu != e2.mu) {
    throw Error(ErrorCode::kParameterMismatch,
                "extensions differ in (p, lambda, mu)");
  }
  if (e1.group.order() > max_order) {
    throw Error(ErrorCode::kBoundExceeded,
                "middle group of order " + e1.group.order().get_str() +
                    " exceeds bound " + std::to_string(max_order));
  }
  return IsomorphismSearch(e1, e2, max_order).Run();
}

}  // namespace pgext
