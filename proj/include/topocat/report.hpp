// Copyright 2026 The topocat Authors
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


#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "topocat/point_set.hpp"

namespace topocat {

using Json = nlohmann::ordered_json;

/// Outcome of checking one law. `witness` is empty on success and names the
/// violating data on failure; `checked` counts the instances examined.
struct LawResult {
  std::string law;
  bool pass = true;
  Json witness = Json::object();
  std::uint64_t checked = 0;
  bool exhaustive = true;
};

class Report {
 public:
  void add(LawResult result) { laws_.push_back(std::move(result)); }
  /// Appends every law of `other`, prefixing names with `prefix` when non-empty.
  void append(const Report& other, const std::string& prefix = {});

  bool pass() const;
  const std::vector<LawResult>& laws() const { return laws_; }
  const LawResult* find(const std::string& law) const;

  /// [{"law": ..., "status": "pass"|"fail", "witness": {...}, "checked": n, "mode": ...}]
  Json to_json() const;
  std::string to_human() const;

 private:
  std::vector<LawResult> laws_;
};

/// Sorted index array.
Json subset_json(const PointSet& s);

/// Point names of the members of `s`, in index order.
Json named_subset_json(const std::vector<std::string>& names, const PointSet& s);

}  // namespace topocat
