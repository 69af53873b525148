// Copyright 2026 The Authors.
//
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

//
// JSON instance files.
//
//   { "n": int, "k": int, "budget": int, "costs": [int...], "monotone": bool,
//     "oracle": { "family": "coverage" | "disjoint_cut" | "tabular",
//                 "coverage": { "universe_weights": [...], "gamma": [...] },
//                 "disjoint_cut": { "edges": [[u, v, w]...] },
//                 "tabular": { "values": [...] } } }
//
// Element indices in files are 0-based; tabular values use the mixed-radix
// order of mixed_radix_index().
//

#ifndef KSKM_IO_HPP_
#define KSKM_IO_HPP_

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "kskm/core.hpp"
#include "kskm/oracles.hpp"

namespace kskm {

using Json = nlohmann::json;

inline Json instance_to_json(const Instance& inst) {
  Json out;
  out["n"] = inst.n();
  out["k"] = inst.k();
  out["budget"] = inst.budget();
  out["costs"] = inst.costs();
  out["monotone"] = inst.monotone();
  Json oracle;
  const ValueOracle& f = inst.oracle();
  if (const auto* cov = dynamic_cast<const CoverageOracle*>(&f)) {
    oracle["family"] = "coverage";
    oracle["coverage"] = {{"universe_weights", cov->universe_weights()},
                          {"gamma", cov->gamma()}};
  } else if (const auto* cut = dynamic_cast<const DisjointCutOracle*>(&f)) {
    Json edges = Json::array();
    for (const Edge& e : cut->edges()) edges.push_back({e.u, e.v, e.weight});
    oracle["family"] = "disjoint_cut";
    oracle["disjoint_cut"] = {{"edges", edges}};
  } else if (const auto* tab = dynamic_cast<const TabularOracle*>(&f)) {
    oracle["family"] = "tabular";
    oracle["tabular"] = {{"values", tab->values()}};
  } else {
    throw Error(ErrorCode::kSchemaError,
                "oracle family '" + f.family() + "' has no file representation");
  }
  out["oracle"] = std::move(oracle);
  return out;
}

namespace internal {

inline const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw Error(ErrorCode::kSchemaError, std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

}  // namespace internal

inline Instance instance_from_json(const Json& j) {
  using internal::field;
  RawInstance raw;
  bool monotone = false;
  try {
    raw.n = field(j, "n").get<std::size_t>();
    raw.k = field(j, "k").get<int>();
    raw.budget = field(j, "budget").get<Value>();
    raw.costs = field(j, "costs").get<std::vector<Value>>();
    monotone = j.contains("monotone") ? j.at("monotone").get<bool>() : false;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaError, e.what());
  }
  if (raw.k < 1) throw Error(ErrorCode::kSchemaError, "k must be at least 1");

  const Json& oracle = field(j, "oracle");
  const std::string family = field(oracle, "family").get<std::string>();
  try {
    if (family == "coverage") {
      const Json& body = field(oracle, "coverage");
      raw.oracle = std::make_shared<CoverageOracle>(
          field(body, "universe_weights").get<std::vector<Value>>(),
          field(body, "gamma").get<std::vector<std::vector<std::vector<std::size_t>>>>(),
          raw.k);
    } else if (family == "disjoint_cut") {
      const Json& body = field(oracle, "disjoint_cut");
      std::vector<Edge> edges;
      for (const Json& e : field(body, "edges")) {
        if (!e.is_array() || e.size() != 3) {
          throw Error(ErrorCode::kSchemaError, "edges are [u, v, w] triples");
        }
        edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(),
                         e[2].get<Value>()});
      }
      raw.oracle = std::make_shared<DisjointCutOracle>(raw.n, raw.k, std::move(edges));
    } else if (family == "tabular") {
      const Json& body = field(oracle, "tabular");
      raw.oracle = std::make_shared<TabularOracle>(
          raw.n, raw.k, field(body, "values").get<std::vector<Value>>(), monotone);
    } else {
      throw Error(ErrorCode::kSchemaError, "unknown oracle family '" + family + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaError, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSchemaError) throw;
    throw Error(ErrorCode::kSchemaError, e.what());
  }
  const bool actual = family == "tabular" ? is_monotone(*raw.oracle)
                                           : raw.oracle->monotone();
  if (actual != monotone) {
    throw Error(ErrorCode::kSchemaError, "monotone flag disagrees with the oracle");
  }
  try {
    return validate_instance(raw);
  } catch (const Error& e) {
    throw Error(ErrorCode::kSchemaError, e.what());
  }
}

inline std::string instance_to_string(const Instance& inst) {
  return instance_to_json(inst).dump(2) + "\n";
}

inline void save_instance(const Instance& inst, const std::string& path) {
  const std::string text = instance_to_string(inst);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buffer.str());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaError, path + ": " + e.what());
  }
  return instance_from_json(j);
}

inline Json solution_to_json(const Solution& x) { return x.assignment(); }

}  // namespace kskm

#endif  // KSKM_IO_HPP_
