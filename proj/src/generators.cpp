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

#include "testcover/generators.hpp"

#include <map>
#include <random>
#include <set>
#include <utility>

#include "json.hpp"
#include "testcover/errors.hpp"

namespace testcover {

using nlohmann::json;

GenSpec parse_genspec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("genspec: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("genspec: expected object with string field \"kind\"");
  }
  GenSpec spec;
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "random") {
    spec.kind = GenSpec::Kind::kRandom;
    spec.n = j.value("n", 0);
    spec.t = j.value("t", 0);
    spec.p = j.value("p", 0.5);
    spec.r = j.value("r", 1);
    spec.seed = j.value("seed", std::uint64_t{0});
  } else if (kind == "barcode") {
    spec.kind = GenSpec::Kind::kBarcode;
    spec.r = j.value("r", 1);
    spec.min_len = j.value("min_len", 1);
    spec.max_len = j.value("max_len", 1);
    if (!j.contains("sequences") || !j["sequences"].is_array()) {
      throw ParseError("genspec: barcode kind requires \"sequences\" array");
    }
    for (const auto& s : j["sequences"]) {
      if (!s.is_string()) {
        throw ParseError("genspec: sequences must hold strings");
      }
      spec.sequences.push_back(s.get<std::string>());
    }
    spec.n = static_cast<int>(spec.sequences.size());
  } else {
    throw ParseError("genspec: unknown kind \"" + kind + "\"");
  }
  return spec;
}

std::string genspec_to_json(const GenSpec& spec, int indent) {
  json j;
  if (spec.kind == GenSpec::Kind::kRandom) {
    j["kind"] = "random";
    j["n"] = spec.n;
    j["t"] = spec.t;
    j["p"] = spec.p;
    j["r"] = spec.r;
    j["seed"] = spec.seed;
  } else {
    j["kind"] = "barcode";
    j["r"] = spec.r;
    j["min_len"] = spec.min_len;
    j["max_len"] = spec.max_len;
    j["sequences"] = spec.sequences;
  }
  return j.dump(indent);
}

Instance gen_random(const GenSpec& spec) {
  if (spec.kind != GenSpec::Kind::kRandom) {
    throw InvalidArgument("gen_random: spec kind is not random");
  }
  if (spec.n < 2 || spec.t < 0 || !(spec.p > 0.0 && spec.p < 1.0) ||
      spec.r < 1) {
    throw InvalidArgument(
        "gen_random requires n >= 2, t >= 0, 0 < p < 1, r >= 1");
  }
  // The raw mt19937_64 stream is pinned by the standard; the uniform double
  // is derived by hand so the draw sequence is identical on every platform.
  std::mt19937_64 rng(spec.seed);
  const auto uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  std::vector<std::vector<int>> tests(static_cast<std::size_t>(spec.t));
  for (auto& test : tests) {
    for (int item = 0; item < spec.n; ++item) {
      if (uniform() < spec.p) test.push_back(item);
    }
  }
  return Instance(spec.n, spec.r, std::move(tests));
}

Instance gen_barcode(const GenSpec& spec) {
  if (spec.kind != GenSpec::Kind::kBarcode) {
    throw InvalidArgument("gen_barcode: spec kind is not barcode");
  }
  const auto& seqs = spec.sequences;
  if (seqs.size() < 2) {
    throw InvalidArgument("gen_barcode requires at least 2 sequences");
  }
  if (spec.min_len < 1 || spec.min_len > spec.max_len) {
    throw InvalidArgument("gen_barcode requires 1 <= min_len <= max_len");
  }
  const int n = static_cast<int>(seqs.size());

  // Distinct substrings, visited by (length, lexicographic).
  std::map<int, std::set<std::string>> by_length;
  for (const std::string& s : seqs) {
    for (int len = spec.min_len; len <= spec.max_len; ++len) {
      if (static_cast<std::size_t>(len) > s.size()) break;
      for (std::size_t pos = 0; pos + len <= s.size(); ++pos) {
        by_length[len].insert(s.substr(pos, static_cast<std::size_t>(len)));
      }
    }
  }

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> tests;
  for (const auto& [len, subs] : by_length) {
    for (const std::string& sub : subs) {
      std::vector<int> items;
      for (int i = 0; i < n; ++i) {
        if (seqs[static_cast<std::size_t>(i)].find(sub) != std::string::npos) {
          items.push_back(i);
        }
      }
      if (items.empty() || static_cast<int>(items.size()) == n) continue;
      if (!seen.insert(items).second) continue;  // same item set seen before
      tests.push_back(std::move(items));
    }
  }
  return Instance(n, spec.r, std::move(tests));
}

Instance generate(const GenSpec& spec) {
  return spec.kind == GenSpec::Kind::kRandom ? gen_random(spec)
                                             : gen_barcode(spec);
}

}  // namespace testcover
