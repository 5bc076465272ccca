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


#include "topocat/report.hpp"

#include <sstream>

namespace topocat {

void Report::append(const Report& other, const std::string& prefix) {
  for (LawResult r : other.laws_) {
    if (!prefix.empty()) r.law = prefix + "." + r.law;
    laws_.push_back(std::move(r));
  }
}

bool Report::pass() const {
  for (const auto& r : laws_) {
    if (!r.pass) return false;
  }
  return true;
}

const LawResult* Report::find(const std::string& law) const {
  for (const auto& r : laws_) {
    if (r.law == law) return &r;
  }
  return nullptr;
}

Json Report::to_json() const {
  Json out = Json::array();
  for (const auto& r : laws_) {
    Json entry;
    entry["law"] = r.law;
    entry["status"] = r.pass ? "pass" : "fail";
    entry["witness"] = r.witness;
    entry["checked"] = r.checked;
    entry["mode"] = r.exhaustive ? "exhaustive" : "sampled";
    out.push_back(std::move(entry));
  }
  return out;
}

std::string Report::to_human() const {
  std::ostringstream out;
  for (const auto& r : laws_) {
    out << (r.pass ? "PASS " : "FAIL ") << r.law << "  (" << r.checked << " checked, "
        << (r.exhaustive ? "exhaustive" : "sampled") << ")\n";
    if (!r.pass || !r.witness.empty()) out << "     witness: " << r.witness.dump() << "\n";
  }
  return out.str();
}

Json subset_json(const PointSet& s) {
  Json out = Json::array();
  s.for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

Json named_subset_json(const std::vector<std::string>& names, const PointSet& s) {
  Json out = Json::array();
  s.for_each([&](std::size_t i) { out.push_back(names.at(i)); });
  return out;
}

}  // namespace topocat
