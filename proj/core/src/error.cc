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

#include "pgext/error.h"

namespace pgext {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid_argument";
    case ErrorCode::kNotPrime:
      return "not_prime";
    case ErrorCode::kPartitionNotDecreasing:
      return "partition_not_decreasing";
    case ErrorCode::kPartitionNotPositive:
      return "partition_not_positive";
    case ErrorCode::kShapeMismatch:
      return "shape_mismatch";
    case ErrorCode::kParameterMismatch:
      return "parameter_mismatch";
    case ErrorCode::kInfiniteGroup:
      return "infinite_group";
    case ErrorCode::kBoundExceeded:
      return "bound_exceeded";
    case ErrorCode::kParseError:
      return "parse_error";
    case ErrorCode::kInternal:
      return "internal";
  }
  return "unknown";
}

}  // namespace pgext
