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

#include "topocat/error.hpp"
#include "topocat/loops.hpp"

using namespace topocat;

namespace {

PartialMap total(const FiniteSpace& x, const FiniteSpace& y, std::vector<std::size_t> v) {
  return PartialMap::from_total(TotalMap(x, y, std::move(v)));
}

}  // namespace

TEST_CASE("realising the loop constructors") {
  const auto s = sierpinski_space();
  CHECK(realize(LoopExpr::empty(s)).rels.empty());

  const auto top = PartialMap::partial_identity(s, PointSet::of(2, {1}));
  const Loop c = realize(LoopExpr::conjugate(top, LoopExpr::empty(s)));
  REQUIRE(c.length() == 2);
  CHECK(c.rels[0] == graph(top));
  CHECK(c.rels[1] == converse(graph(top)));

  const auto k = chain_space(3);
  const auto f = total(k, s, {0, 1, 1});
  const auto g = total(s, s, {0, 1});
  const auto e = LoopExpr::product(LoopExpr::conjugate(f, LoopExpr::empty(k)), LoopExpr::conjugate(g, LoopExpr::empty(s)));
  const Loop p = realize(e);
  REQUIRE(p.length() == 2);
  CHECK(p.rels[0] == product_rel(graph(f), graph(g)));
  CHECK(p.rels[1] == product_rel(converse(graph(f)), converse(graph(g))));
  CHECK(p.anchor.same_topology(product(s, s).space));
  CHECK(p.stages().size() == 3);
}

TEST_CASE("loop constructors validate their inputs") {
  const auto s = sierpinski_space();
  const auto k = chain_space(3);
  CHECK_THROWS_AS(LoopExpr::concat(LoopExpr::empty(s), LoopExpr::empty(k)), Error);
  CHECK_THROWS_AS(LoopExpr::conjugate(total(s, s, {0, 1}), LoopExpr::empty(k)), Error);
  try {
    LoopExpr::conjugate(total(s, s, {1, 0}), LoopExpr::empty(s));
    FAIL("swap should be rejected");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotContinuous);
  }
}

TEST_CASE("lc operator values") {
  const auto s = sierpinski_space();
  const Loop empty{s, {}};
  CHECK(lc_operator(empty, PointSet::of(2, {1})) == s.closure(PointSet::of(2, {1})));
  const Loop id{s, {Relation::identity(s)}};
  CHECK(lc_operator(id, PointSet::of(2, {1})) == PointSet::full(2));
  const auto d = discrete_space(2);
  const Loop bad{d, {Relation::from_pairs(d, d, {{0, 1}})}};
  CHECK(lc_operator(bad, PointSet::of(2, {0})) == PointSet::of(2, {1}));
}

TEST_CASE("the raw loop without acceptability fails with witness {0}") {
  const auto d = discrete_space(2);
  const Loop bad{d, {Relation::from_pairs(d, d, {{0, 1}})}};
  const auto r = lc_check_raw(bad);
  CHECK_FALSE(r.pass());
  const auto& law = r.laws().front();
  CHECK(law.witness["A"] == Json::array({0}));
  CHECK_FALSE(lc_operator(bad, PointSet::of(2, {0})).is_subset_of(d.closure(PointSet::of(2, {0}))));
}

TEST_CASE("conjugation by a continuous total map satisfies the inequality") {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto x = random_space(rng, 3);
    const auto y = random_space(rng, 3);
    const auto f = random_continuous_map(rng, x, y, true);
    const Loop l{y, {graph(f), converse(graph(f))}};
    CHECK(lc_check_raw(l).pass());
  }
}

TEST_CASE("seeded acceptable loops pass exactly") {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto e = random_loop_expr(rng);
    const auto r = lc_check(e);
    CHECK(r.pass());
    for (const auto& law : r.laws()) CHECK(law.exhaustive);
  }
}

TEST_CASE("auxiliary sequences") {
  const auto s = sierpinski_space();
  const auto k = chain_space(3);
  const auto a = auxiliary_sequence(LoopExpr::empty(s));
  CHECK(a.maps.size() == 1);
  CHECK(a.maps[0] == TotalMap::identity(s));

  const auto f = total(k, s, {0, 1, 1});
  const auto c = LoopExpr::conjugate(f, LoopExpr::empty(k));
  const auto b = auxiliary_sequence(c);
  REQUIRE(b.maps.size() == 3);
  CHECK(b.maps[0] == TotalMap::identity(s));
  CHECK(b.maps[1] == f.to_total());
  CHECK(b.maps[2] == TotalMap::identity(s));
  CHECK(validate_aux(realize(c), b).pass());

  const auto g = total(s, s, {1, 1});
  const auto cc = LoopExpr::concat(c, LoopExpr::conjugate(g, LoopExpr::empty(s)));
  const auto m = auxiliary_sequence(cc);
  CHECK(m.maps.size() == 5);
  CHECK(validate_aux(realize(cc), m).pass());
  CHECK(replay_aux_all(realize(cc), m).pass);

  const auto partial = LoopExpr::conjugate(PartialMap::partial_identity(s, PointSet::of(2, {1})), LoopExpr::empty(s));
  try {
    auxiliary_sequence(partial);
    FAIL("partial maps have no auxiliary sequence");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::PartialMapPresent);
  }
}

TEST_CASE("auxiliary sequences of random total loops replay") {
  Rng rng(3);
  LoopGenOptions opt;
  opt.total_only = true;
  for (int t = 0; t < 200; ++t) {
    const auto e = random_loop_expr(rng, opt);
    REQUIRE(e.total_only());
    const auto loop = realize(e);
    const auto aux = auxiliary_sequence(e);
    CHECK(aux.maps.size() == loop.length() + 1);
    CHECK(validate_aux(loop, aux).pass());
    CHECK(replay_aux_all(loop, aux).pass);
  }
}
