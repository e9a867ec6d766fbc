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

#include "pgext/extension.h"

#include <algorithm>
#include <functional>
#include <string>

#include "pgext/error.h"
#include "pgext/snf.h"

namespace pgext {

void Validate(const ExtensionData& ext) {
  if (!IsPrime(ext.p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(ext.p) + " is not prime");
  }
  ValidateType(ext.lambda);
  ValidateType(ext.mu);
  if (ext.a.rows() != ext.m() || ext.a.cols() != ext.l()) {
    throw Error(ErrorCode::kShapeMismatch,
                "coefficient matrix is " + std::to_string(ext.a.rows()) + "x" +
                    std::to_string(ext.a.cols()) + ", expected " +
                    std::to_string(ext.m()) + "x" + std::to_string(ext.l()));
  }
}

IntMatrix ModulusMatrix(std::int64_t p, const PGroupType& lambda,
                        const PGroupType& mu) {
  IntMatrix out(mu.length(), lambda.length());
  for (std::size_t j = 0; j < mu.length(); ++j)
    for (std::size_t i = 0; i < lambda.length(); ++i)
      out(j, i) = Power(p, std::min(lambda.parts[i], mu.parts[j]));
  return out;
}

ExtensionData Normalize(const ExtensionData& ext) {
  Validate(ext);
  ExtensionData out = ext;
  const IntMatrix moduli = ModulusMatrix(ext.p, ext.lambda, ext.mu);
  for (std::size_t j = 0; j < ext.m(); ++j)
    for (std::size_t i = 0; i < ext.l(); ++i)
      out.a(j, i) = Mod(ext.a(j, i), moduli(j, i));
  out.normalized = true;
  return out;
}

IntMatrix PresentationMatrix(const ExtensionData& ext) {
  Validate(ext);
  const std::size_t l = ext.l();
  const std::size_t n = l + ext.m();
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < l; ++i) out(i, i) = Power(ext.p, ext.lambda.parts[i]);
  for (std::size_t j = 0; j < ext.m(); ++j) {
    for (std::size_t i = 0; i < l; ++i) out(l + j, i) = ext.a(j, i);
    out(l + j, l + j) = Power(ext.p, ext.mu.parts[j]);
  }
  return out;
}

PGroupType MiddleType(const ExtensionData& ext) {
  const SNFResult snf = SmithNormalForm(PresentationMatrix(ext));
  std::vector<int> parts;
  for (const Integer& d : snf.Diagonal()) {
    if (d == 0) {
      throw Error(ErrorCode::kInternal,
                  "presentation matrix has a zero invariant factor");
    }
    if (d == 1) continue;
    const int k = PValuation(d, ext.p);
    if (Power(ext.p, k) != d) {
      throw Error(ErrorCode::kInternal,
                  "invariant factor " + d.get_str() + " is not a power of p");
    }
    parts.push_back(k);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return PGroupType{std::move(parts)};
}

ExtensionData ChangeLift(const ExtensionData& ext, const IntMatrix& c) {
  if (c.rows() != ext.a.rows() || c.cols() != ext.a.cols()) {
    throw Error(ErrorCode::kShapeMismatch, "lift shift must match A's shape");
  }
  ExtensionData out = ext;
  for (std::size_t j = 0; j < ext.m(); ++j) {
    const Integer scale = Power(ext.p, ext.mu.parts[j]);
    for (std::size_t i = 0; i < ext.l(); ++i) out.a(j, i) += scale * c(j, i);
  }
  out.normalized = false;
  return out;
}

Integer ExtensionCount(std::int64_t p, const PGroupType& lambda,
                       const PGroupType& mu) {
  int exponent = 0;
  for (int a : lambda.parts)
    for (int b : mu.parts) exponent += std::min(a, b);
  return Power(p, exponent);
}

std::uint64_t ExtensionIndex(const ExtensionData& normalized) {
  const IntMatrix moduli =
      ModulusMatrix(normalized.p, normalized.lambda, normalized.mu);
  Integer index = 0;
  for (std::size_t j = 0; j < normalized.m(); ++j) {
    for (std::size_t i = 0; i < normalized.l(); ++i) {
      const Integer& entry = normalized.a(j, i);
      if (entry < 0 || entry >= moduli(j, i)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "extension index requires a normalized matrix");
      }
      index = index * moduli(j, i) + entry;
    }
  }
  if (!index.fits_ulong_p()) {
    throw Error(ErrorCode::kBoundExceeded, "extension index overflows");
  }
  return index.get_ui();
}

ExtensionData ExtensionAt(std::int64_t p, const PGroupType& lambda,
                          const PGroupType& mu, std::uint64_t index) {
  ExtensionData ext{p, lambda, mu, IntMatrix(mu.length(), lambda.length()),
                    true};
  Validate(ext);
  const IntMatrix moduli = ModulusMatrix(p, lambda, mu);
  Integer rest = static_cast<unsigned long>(index);
  for (std::size_t k = ext.m() * ext.l(); k-- > 0;) {
    const std::size_t j = k / ext.l();
    const std::size_t i = k % ext.l();
    ext.a(j, i) = Mod(rest, moduli(j, i));
    rest /= moduli(j, i);
  }
  if (rest != 0) {
    throw Error(ErrorCode::kInvalidArgument, "extension index out of range");
  }
  return ext;
}

std::vector<ExtensionData> EnumerateExtensions(std::int64_t p,
                                               const PGroupType& lambda,
                                               const PGroupType& mu,
                                               std::uint64_t max_total) {
  const Integer total = ExtensionCount(p, lambda, mu);
  if (total > static_cast<unsigned long>(max_total)) {
    throw Error(ErrorCode::kBoundExceeded,
                total.get_str() + " extensions exceed the bound of " +
                    std::to_string(max_total));
  }
  std::vector<ExtensionData> out;
  const std::uint64_t n = total.get_ui();
  out.reserve(n);
  for (std::uint64_t index = 0; index < n; ++index) {
    out.push_back(ExtensionAt(p, lambda, mu, index));
  }
  return out;
}

}  // namespace pgext
