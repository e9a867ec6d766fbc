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

#include "pgext/equivalence.h"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>
#include <utility>

#include "pgext/error.h"

namespace pgext {
namespace {

void CheckSameParameters(const ExtensionData& a, const ExtensionData& b) {
  if (a.p != b.p || a.lambda != b.lambda || a.mu != b.mu) {
    throw Error(ErrorCode::kParameterMismatch,
                "extensions differ in (p, lambda, mu)");
  }
}

// Reduces an l x m matrix T (rows follow lambda) and returns it transposed
// into the m x l layout of A.
IntMatrix ReduceTransposed(const IntMatrix& t, const IntMatrix& moduli) {
  IntMatrix out(moduli.rows(), moduli.cols());
  for (std::size_t j = 0; j < moduli.rows(); ++j)
    for (std::size_t i = 0; i < moduli.cols(); ++i)
      out(j, i) = Mod(t(i, j), moduli(j, i));
  return out;
}

// Moves that generate the action of Aut(G_lambda) x Aut(G_mu).
struct ActionGenerators {
  std::vector<AutMatrix> f;
  std::vector<AutMatrix> g;
};

ActionGenerators CollectGenerators(std::int64_t p, const PGroupType& lambda,
                                   const PGroupType& mu,
                                   std::uint64_t max_aut_candidates) {
  return {EnumerateAuts(p, lambda, max_aut_candidates),
          EnumerateAuts(p, mu, max_aut_candidates)};
}

// Breadth-first closure of `start` under the generator moves.  Visits only
// indices not yet marked in `visited` and returns them in discovery order.
std::vector<std::uint64_t> CloseOrbit(const ExtensionData& start,
                                      const ActionGenerators& gens,
                                      std::vector<bool>& visited) {
  const AutMatrix id_f = IdentityAut(start.p, start.lambda);
  const AutMatrix id_g = IdentityAut(start.p, start.mu);
  std::vector<std::uint64_t> orbit;
  std::deque<ExtensionData> frontier;
  const std::uint64_t first = ExtensionIndex(start);
  visited[first] = true;
  orbit.push_back(first);
  frontier.push_back(start);
  auto visit = [&](ExtensionData next) {
    const std::uint64_t index = ExtensionIndex(next);
    if (visited[index]) return;
    visited[index] = true;
    orbit.push_back(index);
    frontier.push_back(std::move(next));
  };
  while (!frontier.empty()) {
    const ExtensionData current = std::move(frontier.front());
    frontier.pop_front();
    for (const AutMatrix& f : gens.f) visit(ApplyAutomorphisms(current, f, id_g));
    for (const AutMatrix& g : gens.g) visit(ApplyAutomorphisms(current, id_f, g));
  }
  return orbit;
}

std::uint64_t CheckedTotal(const ExtensionData& ext, std::uint64_t max_total) {
  const Integer total = ExtensionCount(ext.p, ext.lambda, ext.mu);
  if (total > static_cast<unsigned long>(max_total)) {
    throw Error(ErrorCode::kBoundExceeded,
                total.get_str() + " extensions exceed the bound of " +
                    std::to_string(max_total));
  }
  return total.get_ui();
}

}  // namespace

bool IsWitness(const ExtensionData& ext1, const ExtensionData& ext2,
               const Witness& witness) {
  CheckSameParameters(ext1, ext2);
  Validate(ext1);
  Validate(ext2);
  if (!IsValidAut(witness.f.m, ext1.p, ext1.lambda) ||
      !IsValidAut(witness.g.m, ext1.p, ext1.mu)) {
    return false;
  }
  const IntMatrix moduli = ModulusMatrix(ext1.p, ext1.lambda, ext1.mu);
  const IntMatrix lhs = ReduceTransposed(witness.f.m * ext1.a.Transposed(), moduli);
  const IntMatrix rhs = ReduceTransposed(
      ext2.a.Transposed() * ConjugateByPPowers(witness.g), moduli);
  return lhs == rhs;
}

ExtensionData ApplyAutomorphisms(const ExtensionData& ext, const AutMatrix& f,
                                 const AutMatrix& g) {
  Validate(ext);
  if (f.p != ext.p || f.tau != ext.lambda || g.p != ext.p || g.tau != ext.mu) {
    throw Error(ErrorCode::kParameterMismatch,
                "automorphisms do not match the extension's groups");
  }
  ExtensionData out = ext;
  const IntMatrix moduli = ModulusMatrix(ext.p, ext.lambda, ext.mu);
  out.a = ReduceTransposed(f.m * ext.a.Transposed() * ConjugateByPPowers(g),
                           moduli);
  out.normalized = true;
  return out;
}

std::optional<Witness> AreEquivalent(const ExtensionData& ext1,
                                     const ExtensionData& ext2,
                                     const SearchOptions& options) {
  CheckSameParameters(ext1, ext2);
  const ExtensionData a1 = Normalize(ext1);
  const ExtensionData a2 = Normalize(ext2);
  const std::int64_t p = a1.p;

  if (a1 == a2) {
    return Witness{IdentityAut(p, a1.lambda), IdentityAut(p, a1.mu)};
  }
  if (options.middle_type_filter && MiddleType(a1) != MiddleType(a2)) {
    return std::nullopt;
  }

  const std::vector<AutMatrix> fs =
      EnumerateAuts(p, a1.lambda, options.max_aut_candidates);
  const std::vector<AutMatrix> gs =
      EnumerateAuts(p, a1.mu, options.max_aut_candidates);
  const Integer space = Integer(static_cast<unsigned long>(fs.size())) *
                        static_cast<unsigned long>(gs.size());
  if (space > static_cast<unsigned long>(options.max_witnesses)) {
    throw Error(ErrorCode::kBoundExceeded,
                "witness space of " + space.get_str() +
                    " pairs exceeds the bound of " +
                    std::to_string(options.max_witnesses));
  }

  // Tabulate F * A1^T once, then look up A2^T * G^ for each G.
  const IntMatrix moduli = ModulusMatrix(p, a1.lambda, a1.mu);
  const IntMatrix a1t = a1.a.Transposed();
  const IntMatrix a2t = a2.a.Transposed();
  std::unordered_map<std::uint64_t, std::size_t> by_image;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    ExtensionData image = a1;
    image.a = ReduceTransposed(fs[k].m * a1t, moduli);
    by_image.emplace(ExtensionIndex(image), k);
  }
  for (const AutMatrix& g : gs) {
    ExtensionData image = a2;
    image.a = ReduceTransposed(a2t * ConjugateByPPowers(g), moduli);
    const auto hit = by_image.find(ExtensionIndex(image));
    if (hit != by_image.end()) return Witness{fs[hit->second], g};
  }
  return std::nullopt;
}

ExtensionData CanonicalForm(const ExtensionData& ext,
                            const OrbitOptions& options) {
  const ExtensionData start = Normalize(ext);
  const std::uint64_t total = CheckedTotal(start, options.max_total);
  const ActionGenerators gens = CollectGenerators(
      start.p, start.lambda, start.mu, options.max_aut_candidates);
  std::vector<bool> visited(total, false);
  const std::vector<std::uint64_t> orbit = CloseOrbit(start, gens, visited);
  const std::uint64_t least = *std::min_element(orbit.begin(), orbit.end());
  return ExtensionAt(start.p, start.lambda, start.mu, least);
}

OrbitClassification ClassifyAll(std::int64_t p, const PGroupType& lambda,
                                const PGroupType& mu,
                                const OrbitOptions& options) {
  ExtensionData zero{p, lambda, mu, IntMatrix(mu.length(), lambda.length()),
                     true};
  Validate(zero);
  OrbitClassification out;
  out.total = CheckedTotal(zero, options.max_total);
  const ActionGenerators gens =
      CollectGenerators(p, lambda, mu, options.max_aut_candidates);

  // Scanning indices upward means each unvisited index is the least member
  // of its orbit.
  std::vector<bool> visited(out.total, false);
  for (std::uint64_t index = 0; index < out.total; ++index) {
    if (visited[index]) continue;
    ExtensionData rep = ExtensionAt(p, lambda, mu, index);
    const std::uint64_t size = CloseOrbit(rep, gens, visited).size();
    PGroupType middle = MiddleType(rep);
    out.classes.push_back({std::move(rep), size, std::move(middle)});
  }
  return out;
}

}  // namespace pgext
