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

#include "cli.h"

#include <CLI11.hpp>

#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "pgext/abelian.h"
#include "pgext/equivalence.h"
#include "pgext/error.h"
#include "pgext/extension.h"
#include "pgext/json_io.h"
#include "pgext/oracle.h"
#include "pgext/snf.h"

namespace pgext::cli {
namespace {

using json::Json;

constexpr std::array<std::string_view, 7> kSubcommands = {
    "snf", "decompose", "build", "type", "equiv", "classify", "oracle-equiv"};

struct Flags {
  std::string input_path;
  std::string inline_json;
  std::int64_t max_order = kDefaultMaxGroupOrder;
  std::uint64_t max_witnesses = 1'000'000;
  std::uint64_t max_total = kDefaultMaxExtensions;
  // classify
  std::optional<std::int64_t> p;
  std::optional<std::string> lambda;
  std::optional<std::string> mu;
  // decompose
  std::optional<std::string> orders;
};

Json ErrorObject(std::string_view code, const std::string& message) {
  Json out = Json::object();
  out["error"] = code;
  out["message"] = message;
  return out;
}

int Report(std::ostream& out, std::ostream& err, int exit_code,
           std::string_view code, const std::string& message) {
  err << "pgext: " << message << '\n';
  out << ErrorObject(code, message).dump() << '\n';
  return exit_code;
}

Json LoadPayload(const Flags& flags) {
  std::string text;
  if (!flags.inline_json.empty()) {
    text = flags.inline_json;
  } else if (!flags.input_path.empty()) {
    std::ifstream in(flags.input_path);
    if (!in) {
      throw Error(ErrorCode::kParseError, "cannot open " + flags.input_path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

std::vector<int> SplitParts(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "bad list entry \"" + item + "\"");
    }
  }
  return parts;
}

std::pair<ExtensionData, ExtensionData> ExtensionPair(const Json& payload) {
  if (payload.is_array() && payload.size() == 2) {
    return {json::ToExtension(payload[0]), json::ToExtension(payload[1])};
  }
  if (payload.is_object() && payload.contains("ext1") &&
      payload.contains("ext2")) {
    return {json::ToExtension(payload["ext1"]),
            json::ToExtension(payload["ext2"])};
  }
  throw Error(ErrorCode::kParseError,
              "expected [ext1, ext2] or {\"ext1\": ..., \"ext2\": ...}");
}

Json RunSnf(const Flags& flags) {
  Json payload = LoadPayload(flags);
  if (payload.is_object()) {
    if (!payload.contains("matrix")) {
      throw Error(ErrorCode::kParseError, "missing field \"matrix\"");
    }
    payload = payload["matrix"];
  }
  const IntMatrix m = json::ToMatrix(payload);
  if (m.empty()) throw Error(ErrorCode::kInvalidArgument, "empty matrix");
  return json::FromSnf(SmithNormalForm(m));
}

Json RunDecompose(const Flags& flags) {
  std::vector<std::int64_t> orders;
  if (flags.orders) {
    for (int n : SplitParts(*flags.orders)) orders.push_back(n);
  } else {
    Json payload = LoadPayload(flags);
    if (payload.is_object()) {
      if (!payload.contains("orders")) {
        throw Error(ErrorCode::kParseError, "missing field \"orders\"");
      }
      payload = payload["orders"];
    }
    if (!payload.is_array()) {
      throw Error(ErrorCode::kParseError, "orders must be an array");
    }
    for (const Json& n : payload) {
      if (!n.is_number_integer()) {
        throw Error(ErrorCode::kParseError, "orders must be integers");
      }
      orders.push_back(n.get<std::int64_t>());
    }
  }
  Json components = Json::array();
  for (const auto& [p, type] : PrimaryDecompose(orders)) {
    Json entry = Json::object();
    entry["p"] = p;
    entry["type"] = json::FromType(type);
    components.push_back(std::move(entry));
  }
  Json out = Json::object();
  out["components"] = std::move(components);
  return out;
}

Json RunBuild(const Flags& flags) {
  const ExtensionData ext = json::ToExtension(LoadPayload(flags));
  Json out = Json::object();
  out["matrix"] = json::FromMatrix(PresentationMatrix(ext));
  return out;
}

Json RunType(const Flags& flags) {
  const ExtensionData ext = json::ToExtension(LoadPayload(flags));
  Json out = Json::object();
  out["middle_type"] = json::FromType(MiddleType(ext));
  return out;
}

Json RunEquiv(const Flags& flags) {
  const auto [ext1, ext2] = ExtensionPair(LoadPayload(flags));
  SearchOptions options;
  options.max_witnesses = flags.max_witnesses;
  const auto witness = AreEquivalent(ext1, ext2, options);
  Json out = Json::object();
  out["equivalent"] = witness.has_value();
  out["witness"] = witness ? json::FromWitness(*witness) : Json(nullptr);
  return out;
}

Json RunClassify(const Flags& flags) {
  std::int64_t p = 0;
  PGroupType lambda;
  PGroupType mu;
  if (flags.p || flags.lambda || flags.mu) {
    if (!flags.p || !flags.lambda || !flags.mu) {
      throw Error(ErrorCode::kParseError,
                  "classify needs all of --p, --lambda and --mu");
    }
    p = *flags.p;
    lambda.parts = SplitParts(*flags.lambda);
    mu.parts = SplitParts(*flags.mu);
  } else {
    const Json payload = LoadPayload(flags);
    if (!payload.is_object() || !payload.contains("p") ||
        !payload.contains("lambda") || !payload.contains("mu")) {
      throw Error(ErrorCode::kParseError,
                  "expected {\"p\": ..., \"lambda\": [...], \"mu\": [...]}");
    }
    if (!payload["p"].is_number_integer()) {
      throw Error(ErrorCode::kParseError, "\"p\" must be an integer");
    }
    p = payload["p"].get<std::int64_t>();
    lambda = json::ToType(payload["lambda"]);
    mu = json::ToType(payload["mu"]);
  }
  OrbitOptions options;
  options.max_total = flags.max_total;
  return json::FromClassification(ClassifyAll(p, lambda, mu, options));
}

Json RunOracleEquiv(const Flags& flags) {
  const auto [ext1, ext2] = ExtensionPair(LoadPayload(flags));
  const ExplicitExtension e1 = RealizeExtension(ext1, flags.max_order);
  const ExplicitExtension e2 = RealizeExtension(ext2, flags.max_order);
  Json out = Json::object();
  out["equivalent"] = DiagramEquivalent(e1, e2, flags.max_order);
  return out;
}

void AddPayloadFlags(CLI::App* sub, Flags& flags) {
  sub->add_option("--input", flags.input_path, "Read the JSON payload from a file");
  sub->add_option("--json", flags.inline_json, "Inline JSON payload");
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  if (args.size() > 1 && !args[1].starts_with('-')) {
    bool known = false;
    for (std::string_view name : kSubcommands) known = known || args[1] == name;
    if (!known) {
      return Report(out, err, kExitInvalid, "unknown_subcommand",
                    "unknown subcommand \"" + args[1] + "\"");
    }
  }

  Flags flags;
  CLI::App app{"Extensions of finite abelian p-groups", "pgext"};
  app.require_subcommand(1);
  app.add_option("--max-order", flags.max_order,
                 "Largest middle group the oracle will enumerate");
  app.add_option("--max-witnesses", flags.max_witnesses,
                 "Largest automorphism-pair space searched by equiv");
  app.add_option("--max-total", flags.max_total,
                 "Largest number of extensions classify will enumerate");

  auto* snf = app.add_subcommand("snf", "Smith normal form with transforms");
  auto* decompose = app.add_subcommand("decompose", "Primary decomposition");
  auto* build = app.add_subcommand("build", "Presentation matrix of an extension");
  auto* type = app.add_subcommand("type", "Type of the middle group");
  auto* equiv = app.add_subcommand("equiv", "Decide equivalence by witness search");
  auto* classify = app.add_subcommand("classify", "Orbits of all extensions");
  auto* oracle = app.add_subcommand("oracle-equiv",
                                    "Decide equivalence by brute force");
  for (CLI::App* sub : {snf, decompose, build, type, equiv, classify, oracle}) {
    AddPayloadFlags(sub, flags);
    sub->fallthrough();
  }
  decompose->add_option("--orders", flags.orders, "Comma-separated orders");
  classify->add_option("--p", flags.p, "Prime");
  classify->add_option("--lambda", flags.lambda, "Subgroup type, e.g. 2,1");
  classify->add_option("--mu", flags.mu, "Quotient type, e.g. 1");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return Report(out, err, kExitInvalid, "usage", e.what());
  }

  try {
    Json result;
    if (snf->parsed()) result = RunSnf(flags);
    if (decompose->parsed()) result = RunDecompose(flags);
    if (build->parsed()) result = RunBuild(flags);
    if (type->parsed()) result = RunType(flags);
    if (equiv->parsed()) result = RunEquiv(flags);
    if (classify->parsed()) result = RunClassify(flags);
    if (oracle->parsed()) result = RunOracleEquiv(flags);
    out << result.dump() << '\n';
    return kExitOk;
  } catch (const Error& e) {
    const int code =
        e.code() == ErrorCode::kBoundExceeded ? kExitBound : kExitInvalid;
    return Report(out, err, code, ErrorCodeName(e.code()), e.what());
  } catch (const Json::exception& e) {
    return Report(out, err, kExitInvalid, "parse_error", e.what());
  }
}

}  // namespace pgext::cli
