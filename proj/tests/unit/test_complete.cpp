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


#include "support.hpp"

#include "topocat/complete.hpp"
#include "topocat/io.hpp"

using namespace topocat;

namespace {

const io::Path kData = TOPOCAT_DATA_DIR;

Bundle load(const char* file) { return io::read_bundle(Json(file), kData); }

bool has_pair(const BinaryRelation& r, std::size_t a, std::size_t b) { return r.contains(a, b); }

}  // namespace

TEST_CASE("identity base relations close to identity graphs") {
  const Json spec = {
      {"objects", Json::array({{{"name", "X"}, {"space", "chain:3"}}})},
      {"stages", Json::array({Json::object(), Json::object(), Json::object()})},
      {"base", Json::array({{{"X", Json::array({{0, 0}, {1, 1}, {2, 2}})}},
                            {{"X", Json::array({{0, 0}, {1, 1}, {2, 2}})}}})}};
  const Bundle b = io::read_bundle(spec, kData);
  const auto fam = close_relations(b).family;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) CHECK(fam.at(0, i, j) == BinaryRelation::identity(3));
  }
  CHECK(validate_family(b, fam).pass());
  CHECK(verify_l5(b, fam).pass());
}

TEST_CASE("two base steps compose across three stages") {
  const Bundle b = load("bundle_chain.json");
  const auto c = close_relations(b, true);
  CHECK(has_pair(c.family.at(0, 0, 2), 0, 1));
  bool via_l2 = false;
  for (const auto& t : c.trace) via_l2 = via_l2 || (t.rule == "L2" && t.i == 0 && t.j == 2 && t.x == 0 && t.y == 1);
  CHECK(via_l2);
  CHECK(validate_family(b, c.family).pass());
  CHECK(verify_l5(b, c.family).pass());
}

TEST_CASE("declared products contain the product of the factor relations") {
  const Bundle b = load("bundle_product.json");
  const auto fam = close_relations(b).family;
  const auto& rx = fam.at(0, 0, 1);
  const auto& rxx = fam.at(1, 0, 1);
  const std::size_t n = rx.target_size();
  for (auto [a, c] : rx.pairs()) {
    for (auto [a2, c2] : rx.pairs()) CHECK(rxx.contains(pair_index(a, a2, n), pair_index(c, c2, n)));
  }
  CHECK(rx.contains(0, 1));
  CHECK(validate_family(b, fam).pass());
}

TEST_CASE("an injected unjustified pair is reported") {
  const Bundle b = load("bundle_poset.json");
  auto fam = close_relations(b).family;
  CHECK(verify_l5(b, fam).pass());
  fam.at(0, 0, 1).insert(2, 0);
  const auto r = verify_l5(b, fam);
  CHECK_FALSE(r.pass());
  const auto& w = r.laws().front().witness;
  CHECK(w.contains("symbol"));
  CHECK(w.contains("element"));
}

TEST_CASE("empty base relations leave only step graphs") {
  Bundle b = load("bundle_poset.json");
  for (auto& per_stage : b.base) {
    for (auto& r : per_stage) r = BinaryRelation(r.source_size(), r.target_size());
  }
  const auto fam = close_relations(b).family;
  CHECK(fam.at(0, 0, 1) == BinaryRelation::identity(3));
  CHECK(verify_l5(b, fam).pass());
}

TEST_CASE("hypothesis violations are rejected with a witness") {
  const Bundle b = load("bundle_bad.json");
  const auto w = find_hypothesis_violation(b);
  REQUIRE(w.has_value());
  CHECK(w->symbol_name == "phi");
  CHECK(w->stage == 0);
  CHECK(w->element_name == "0");
  try {
    close_relations(b);
    FAIL("violating bundle accepted");
  } catch (const HypothesisViolated& e) {
    CHECK(e.kind() == ErrorKind::HypothesisViolated);
    CHECK(e.witness().element == w->element);
  }
}

TEST_CASE("assembly of a poset model has both inclusions") {
  const Bundle b = load("bundle_poset.json");
  const auto a = assemble_top_model(b, close_relations(b).family);
  CHECK(a.report.find("backward_inclusion")->pass);
  CHECK(a.report.find("forward_inclusion")->pass);
  // R-bar_ii is the identity, so last-stage points are isolated at any finite depth.
  CHECK(a.colimits.at(0).space.same_topology(discrete_space(3)));
}

TEST_CASE("a shallow truncation fails the forward inclusion at the last stage") {
  const Bundle b = load("bundle_chain.json");
  const auto a = assemble_top_model(b, close_relations(b).family);
  CHECK(a.report.find("backward_inclusion")->pass);
  const auto* fwd = a.report.find("forward_inclusion");
  CHECK_FALSE(fwd->pass);
  CHECK(fwd->witness["stage"] == 2);
  const auto& d = a.diagnostics["symbols"][0];
  CHECK(d["forward_by_stage"] == Json::array({true, true, false}));
}

TEST_CASE("empty symbols satisfy both inclusions") {
  Bundle b = load("bundle_poset.json");
  for (auto& st : b.stages) st.symbols[0] = PointSet(3);
  const auto a = assemble_top_model(b, close_relations(b).family);
  CHECK(a.report.find("backward_inclusion")->pass);
  CHECK(a.report.find("forward_inclusion")->pass);
}

TEST_CASE("random bundles: soundness, L5, backward inclusion, extension equality") {
  Rng rng(17);
  for (int t = 0; t < 60; ++t) {
    const Bundle b = random_bundle(rng);
    const auto fam = close_relations(b).family;
    CHECK(validate_family(b, fam).pass());
    CHECK(verify_l5(b, fam).pass());
    const auto a = assemble_top_model(b, fam);
    CHECK(a.report.find("backward_inclusion")->pass);
    for (const auto& d : a.diagnostics["symbols"]) {
      const auto& eq = d["extension_equality_by_stage"];
      const auto& fw = d["forward_by_stage"];
      for (std::size_t i = 0; i < eq.size(); ++i) {
        if (eq[i].get<bool>()) CHECK(fw[i].get<bool>());
      }
    }
  }
}

TEST_CASE("enlarging the base never shrinks the closure") {
  Rng rng(23);
  int grown = 0;
  for (int t = 0; t < 60; ++t) {
    const Bundle b = random_bundle(rng);
    if (b.depth() < 2) continue;
    Bundle bigger = b;
    const std::size_t x = rng.below(b.site.object_count());
    auto& r = bigger.base[0][x];
    if (r.source_size() == 0 || r.target_size() == 0) continue;
    r.insert(rng.below(r.source_size()), rng.below(r.target_size()));
    if (find_hypothesis_violation(bigger)) continue;
    ++grown;
    CHECK(close_relations(b).family.is_subset_of(close_relations(bigger).family));
  }
  CHECK(grown > 0);
}

TEST_CASE("broken hypotheses are detected") {
  Rng rng(29);
  int broken = 0;
  for (int t = 0; t < 60; ++t) {
    const Bundle b = random_bundle(rng);
    const auto bad = break_hypothesis(rng, b);
    if (!bad) continue;
    ++broken;
    const auto w = find_hypothesis_violation(*bad);
    REQUIRE(w.has_value());
    const auto& sym = bad->site.symbols()[w->symbol];
    const auto eff = effective_base(*bad);
    const PointSet pre = eff[w->stage][sym.object].preimage(bad->stages[w->stage + 1].symbols[w->symbol]);
    CHECK(pre.test(w->element));
    CHECK_FALSE(bad->stages[w->stage].symbols[*sym.diamond].test(w->element));
    CHECK_THROWS_AS(close_relations(*bad), HypothesisViolated);
  }
  CHECK(broken > 0);
}
