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

#ifndef PGEXT_SNF_H_
#define PGEXT_SNF_H_

#include "pgext/int_matrix.h"

namespace pgext {

// Smith normal form D = U * M * V with U, V unimodular.
//
// D has the shape of M; its diagonal d_1, d_2, ... is non-negative with
// d_k | d_{k+1}, zeros last.  The pivot rule (least absolute value, first in
// row-major order on ties) is deterministic, so U and V are reproducible.
struct SNFResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;

  std::vector<Integer> Diagonal() const;
};

SNFResult SmithNormalForm(const IntMatrix& m);

}  // namespace pgext

#endif  // PGEXT_SNF_H_
