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

#ifndef PGEXT_JSON_IO_H_
#define PGEXT_JSON_IO_H_

#include <nlohmann/json.hpp>

#include "pgext/equivalence.h"
#include "pgext/extension.h"
#include "pgext/int_matrix.h"
#include "pgext/snf.h"

// JSON encodings shared by the command-line tool and external callers.
//
// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; both forms are accepted on input.  Objects use insertion order
// so output is byte-stable.  Parse failures throw Error(kParseError).
namespace pgext::json {

using Json = nlohmann::ordered_json;

Json FromInteger(const Integer& value);
Integer ToInteger(const Json& value);

Json FromMatrix(const IntMatrix& m);
// cols is used only when the array has no rows.
IntMatrix ToMatrix(const Json& value, std::size_t cols_if_empty = 0);

Json FromType(const PGroupType& type);
PGroupType ToType(const Json& value);

// {"p": int, "lambda": [...], "mu": [...], "A": [[...]]}
Json FromExtension(const ExtensionData& ext);
ExtensionData ToExtension(const Json& value);

// {"D": ..., "U": ..., "V": ...}
Json FromSnf(const SNFResult& snf);

// {"F": [[...]], "G": [[...]]}
Json FromWitness(const Witness& witness);

// {"total": n, "classes": [{"A": ..., "orbit_size": k, "middle_type": [...]}]}
Json FromClassification(const OrbitClassification& classes);

}  // namespace pgext::json

#endif  // PGEXT_JSON_IO_H_
