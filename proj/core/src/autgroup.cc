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

#include "pgext/autgroup.h"

#include <algorithm>
#include <string>
#include <utility>

#include "pgext/error.h"

namespace pgext {
namespace {

int DivisibilityExponent(const PGroupType& tau, std::size_t i, std::size_t j) {
  return std::max(0, tau.parts[i] - tau.parts[j]);
}

void CheckSquare(const IntMatrix& m, const PGroupType& tau) {
  if (m.rows() != tau.length() || m.cols() != tau.length()) {
    throw Error(ErrorCode::kShapeMismatch,
                "automorphism matrix must be " + std::to_string(tau.length()) +
                    "x" + std::to_string(tau.length()));
  }
}

}  // namespace

bool IsValidAut(const IntMatrix& m, std::int64_t p, const PGroupType& tau) {
  CheckSquare(m, tau);
  const std::size_t t = tau.length();
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      const Integer d = Power(p, DivisibilityExponent(tau, i, j));
      if (!mpz_divisible_p(m(i, j).get_mpz_t(), d.get_mpz_t())) return false;
    }
  }
  const Integer det = Determinant(m);
  const Integer prime = static_cast<long>(p);
  return !mpz_divisible_p(det.get_mpz_t(), prime.get_mpz_t());
}

IntMatrix ReduceAut(const IntMatrix& m, std::int64_t p, const PGroupType& tau) {
  CheckSquare(m, tau);
  IntMatrix out = m;
  for (std::size_t i = 0; i < tau.length(); ++i) {
    const Integer modulus = Power(p, tau.parts[i]);
    for (std::size_t j = 0; j < tau.length(); ++j) out(i, j) = Mod(m(i, j), modulus);
  }
  return out;
}

AutMatrix IdentityAut(std::int64_t p, const PGroupType& tau) {
  return AutMatrix{p, tau, IntMatrix::Identity(tau.length())};
}

AutMatrix Compose(const AutMatrix& a, const AutMatrix& b) {
  if (a.p != b.p || a.tau != b.tau) {
    throw Error(ErrorCode::kParameterMismatch,
                "composing automorphisms of different groups");
  }
  return AutMatrix{a.p, a.tau, ReduceAut(a.m * b.m, a.p, a.tau)};
}

Integer AutCandidateCount(std::int64_t p, const PGroupType& tau) {
  int exponent = 0;
  for (int a : tau.parts)
    for (int b : tau.parts) exponent += std::min(a, b);
  return Power(p, exponent);
}

AutEnumerator::AutEnumerator(std::int64_t p, PGroupType tau,
                             std::uint64_t max_candidates)
    : p_(p), tau_(std::move(tau)) {
  ValidateType(tau_);
  if (!IsPrime(p_)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p_) + " is not prime");
  }
  const Integer candidates = AutCandidateCount(p_, tau_);
  if (candidates > static_cast<unsigned long>(max_candidates)) {
    throw Error(ErrorCode::kBoundExceeded,
                "automorphism search space for " + tau_.ToString() + " has " +
                    candidates.get_str() + " candidates, bound is " +
                    std::to_string(max_candidates));
  }
  const std::size_t t = tau_.length();
  current_ = IntMatrix(t, t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      step_.push_back(Power(p_, DivisibilityExponent(tau_, i, j)));
      limit_.push_back(Power(p_, tau_.parts[i]));
    }
  }
}

// Odometer over the divisibility-compatible residues, last entry fastest.
bool AutEnumerator::Advance() {
  const std::size_t t = tau_.length();
  for (std::size_t k = t * t; k-- > 0;) {
    Integer& entry = current_(k / t, k % t);
    entry += step_[k];
    if (entry < limit_[k]) return true;
    entry = 0;
  }
  return false;
}

std::optional<AutMatrix> AutEnumerator::Next() {
  while (!exhausted_) {
    // current_ is the next unvisited candidate.
    IntMatrix candidate = current_;
    if (!Advance()) exhausted_ = true;
    if (IsValidAut(candidate, p_, tau_)) {
      return AutMatrix{p_, tau_, std::move(candidate)};
    }
  }
  return std::nullopt;
}

std::vector<AutMatrix> EnumerateAuts(std::int64_t p, const PGroupType& tau,
                                     std::uint64_t max_candidates) {
  AutEnumerator it(p, tau, max_candidates);
  std::vector<AutMatrix> out;
  while (auto next = it.Next()) out.push_back(std::move(*next));
  return out;
}

IntMatrix ConjugateByPPowers(const IntMatrix& g, std::int64_t p,
                             const PGroupType& mu) {
  CheckSquare(g, mu);
  const std::size_t t = mu.length();
  IntMatrix out(t, t);
  for (std::size_t k = 0; k < t; ++k) {
    for (std::size_t j = 0; j < t; ++j) {
      const int shift = mu.parts[j] - mu.parts[k];
      if (shift >= 0) {
        out(k, j) = g(k, j) * Power(p, shift);
        continue;
      }
      const Integer d = Power(p, -shift);
      if (!mpz_divisible_p(g(k, j).get_mpz_t(), d.get_mpz_t())) {
        throw Error(ErrorCode::kInvalidArgument,
                    "matrix violates the automorphism divisibility pattern");
      }
      Integer q;
      mpz_divexact(q.get_mpz_t(), g(k, j).get_mpz_t(), d.get_mpz_t());
      out(k, j) = std::move(q);
    }
  }
  return out;
}

}  // namespace pgext
