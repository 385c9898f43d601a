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

#include "testcover/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "testcover/errors.hpp"

namespace testcover {

using nlohmann::json;

ItemPair::ItemPair(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
  if (a == b) {
    throw InvalidArgument("item pair requires two distinct items, got " +
                          std::to_string(a) + " twice");
  }
}

std::int64_t num_pairs(int n) {
  return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

std::int64_t pair_index(ItemPair a, int n) {
  const std::int64_t i = a.i;
  const std::int64_t j = a.j;
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

ItemPair pair_from_index(std::int64_t id, int n) {
  if (id < 0 || id >= num_pairs(n)) {
    throw InvalidArgument("pair id " + std::to_string(id) +
                          " out of range for n=" + std::to_string(n));
  }
  std::int64_t rest = id;
  for (int i = 0; i < n - 1; ++i) {
    const std::int64_t row = n - 1 - i;
    if (rest < row) return ItemPair(i, i + 1 + static_cast<int>(rest));
    rest -= row;
  }
  throw InvalidArgument("unreachable pair id");  // guarded above
}

Instance::Instance(int n, int r, std::vector<std::vector<int>> tests)
    : n_(n), r_(r), tests_(std::move(tests)) {
  if (n_ < 2) {
    throw InvalidArgument("instance requires n >= 2, got " +
                          std::to_string(n_));
  }
  if (r_ < 1) {
    throw InvalidArgument("instance requires r >= 1, got " +
                          std::to_string(r_));
  }
  masks_.reserve(tests_.size());
  for (std::size_t t = 0; t < tests_.size(); ++t) {
    auto& items = tests_[t];
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    DynamicBitset mask(static_cast<std::size_t>(n_));
    for (int item : items) {
      if (item < 0 || item >= n_) {
        throw InvalidArgument("tests[" + std::to_string(t) + "]: item id " +
                              std::to_string(item) + " out of range [0, " +
                              std::to_string(n_) + ")");
      }
      mask.set(static_cast<std::size_t>(item));
    }
    masks_.push_back(std::move(mask));
  }
}

namespace {

json parse_or_throw(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

int require_int(const json& j, const char* field, const char* what) {
  if (!j.contains(field) || !j[field].is_number_integer()) {
    throw ParseError(std::string(what) + ": missing or non-integer field \"" +
                     field + "\"");
  }
  return j[field].get<int>();
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
  const json j = parse_or_throw(json_text, "instance");
  if (!j.is_object()) throw ParseError("instance: top level must be an object");
  const int n = require_int(j, "n", "instance");
  const int r = require_int(j, "r", "instance");
  if (!j.contains("tests") || !j["tests"].is_array()) {
    throw ParseError("instance: missing or non-array field \"tests\"");
  }
  std::vector<std::vector<int>> tests;
  tests.reserve(j["tests"].size());
  for (std::size_t t = 0; t < j["tests"].size(); ++t) {
    const json& jt = j["tests"][t];
    if (!jt.is_array()) {
      throw ParseError("instance: tests[" + std::to_string(t) +
                       "] must be an array of item ids");
    }
    std::vector<int> items;
    items.reserve(jt.size());
    for (std::size_t i = 0; i < jt.size(); ++i) {
      if (!jt[i].is_number_integer()) {
        throw ParseError("instance: tests[" + std::to_string(t) + "][" +
                         std::to_string(i) + "] must be an integer item id");
      }
      items.push_back(jt[i].get<int>());
    }
    tests.push_back(std::move(items));
  }
  try {
    return Instance(n, r, std::move(tests));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string instance_to_json(const Instance& instance, int indent) {
  json j;
  j["n"] = instance.item_count();
  j["r"] = instance.redundancy();
  json tests = json::array();
  for (int t = 0; t < instance.test_count(); ++t) {
    tests.push_back(instance.test_items(t));
  }
  j["tests"] = std::move(tests);
  return j.dump(indent);
}

Solution parse_solution(const std::string& json_text) {
  const json j = parse_or_throw(json_text, "solution");
  if (!j.is_object() || !j.contains("picks") || !j["picks"].is_array()) {
    throw ParseError("solution: expected object with array field \"picks\"");
  }
  Solution s;
  for (const auto& v : j["picks"]) {
    if (!v.is_number_integer()) {
      throw ParseError("solution: picks must hold integer test indices");
    }
    s.picks.push_back(v.get<int>());
  }
  return s;
}

std::string solution_to_json(const Solution& solution, int indent) {
  json j;
  j["picks"] = solution.picks;
  return j.dump(indent);
}

}  // namespace testcover
