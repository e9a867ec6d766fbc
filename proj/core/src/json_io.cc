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

#include "pgext/json_io.h"

#include <string>
#include <vector>

#include "pgext/error.h"

namespace pgext::json {
namespace {

[[noreturn]] void Fail(const std::string& message) {
  throw Error(ErrorCode::kParseError, message);
}

const Json& Field(const Json& object, const char* key) {
  if (!object.is_object()) Fail("expected a JSON object");
  const auto it = object.find(key);
  if (it == object.end()) Fail(std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace

Json FromInteger(const Integer& value) {
  if (value.fits_slong_p()) return Json(static_cast<std::int64_t>(value.get_si()));
  return Json(value.get_str());
}

Integer ToInteger(const Json& value) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) {
      return Integer(static_cast<unsigned long>(value.get<std::uint64_t>()));
    }
    return Integer(static_cast<long>(value.get<std::int64_t>()));
  }
  if (value.is_string()) {
    Integer out;
    if (out.set_str(value.get<std::string>(), 10) != 0) {
      Fail("malformed integer string \"" + value.get<std::string>() + "\"");
    }
    return out;
  }
  Fail("expected an integer, got " + value.dump());
}

Json FromMatrix(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(FromInteger(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix ToMatrix(const Json& value, std::size_t cols_if_empty) {
  if (!value.is_array()) Fail("expected a matrix as an array of rows");
  std::vector<std::vector<Integer>> rows;
  for (const Json& row : value) {
    if (!row.is_array()) Fail("matrix row is not an array");
    std::vector<Integer> entries;
    for (const Json& e : row) entries.push_back(ToInteger(e));
    if (!rows.empty() && entries.size() != rows.front().size()) {
      Fail("matrix rows have different lengths");
    }
    rows.push_back(std::move(entries));
  }
  return IntMatrix::FromRows(rows, cols_if_empty);
}

Json FromType(const PGroupType& type) {
  Json out = Json::array();
  for (int part : type.parts) out.push_back(part);
  return out;
}

PGroupType ToType(const Json& value) {
  if (!value.is_array()) Fail("expected a partition as an array of integers");
  PGroupType type;
  for (const Json& part : value) {
    if (!part.is_number_integer()) Fail("partition parts must be integers");
    type.parts.push_back(part.get<int>());
  }
  return type;
}

Json FromExtension(const ExtensionData& ext) {
  Json out = Json::object();
  out["p"] = ext.p;
  out["lambda"] = FromType(ext.lambda);
  out["mu"] = FromType(ext.mu);
  out["A"] = FromMatrix(ext.a);
  return out;
}

ExtensionData ToExtension(const Json& value) {
  ExtensionData ext;
  const Json& p = Field(value, "p");
  if (!p.is_number_integer()) Fail("\"p\" must be an integer");
  ext.p = p.get<std::int64_t>();
  ext.lambda = ToType(Field(value, "lambda"));
  ext.mu = ToType(Field(value, "mu"));
  // An m x 0 matrix serializes as m empty rows; 0 x l as [].
  ext.a = ToMatrix(Field(value, "A"), ext.lambda.length());
  return ext;
}

Json FromSnf(const SNFResult& snf) {
  Json out = Json::object();
  out["D"] = FromMatrix(snf.D);
  out["U"] = FromMatrix(snf.U);
  out["V"] = FromMatrix(snf.V);
  return out;
}

Json FromWitness(const Witness& witness) {
  Json out = Json::object();
  out["F"] = FromMatrix(witness.f.m);
  out["G"] = FromMatrix(witness.g.m);
  return out;
}

Json FromClassification(const OrbitClassification& classes) {
  Json out = Json::object();
  out["total"] = classes.total;
  Json list = Json::array();
  for (const OrbitClass& c : classes.classes) {
    Json entry = Json::object();
    entry["A"] = FromMatrix(c.representative.a);
    entry["orbit_size"] = c.orbit_size;
    entry["middle_type"] = FromType(c.middle_type);
    list.push_back(std::move(entry));
  }
  out["classes"] = std::move(list);
  return out;
}

}  // namespace pgext::json
