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
#include "topocat/modal.hpp"
#include "topocat/rel.hpp"

using namespace topocat;

TEST_CASE("S4 laws on small spaces") {
  CHECK(check_modal_s4(ModalAlgebraView::of(sierpinski_space())).pass());
  CHECK(check_modal_s4(ModalAlgebraView::of(point_space())).pass());
  for (const auto& x : enumerate_topologies(3)) CHECK(check_modal_s4(ModalAlgebraView::of(x)).pass());
}

TEST_CASE("a complement diamond is caught") {
  const auto x = point_space();
  const auto bad = ModalAlgebraView::with_diamond(x, [](const PointSet& s) { return s.complement(); });
  const auto r = check_modal_s4(bad);
  CHECK_FALSE(r.pass());
  const auto* infl = r.find("inflationary");
  REQUIRE(infl != nullptr);
  CHECK_FALSE(infl->pass);
  CHECK(infl->witness["S"] == Json::array({0}));

  const auto s = sierpinski_space();
  const auto bad2 = ModalAlgebraView::with_diamond(s, [](const PointSet& a) { return a.complement(); });
  CHECK_FALSE(check_modal_s4(bad2).find("inflationary")->pass);
  CHECK_FALSE(s.full_set().is_subset_of(bad2.diamond(s.full_set())));
}

TEST_CASE("product closure of rectangles") {
  const auto s = sierpinski_space();
  const auto p = product(s, s);
  CHECK(p.space.closure(rectangle(PointSet::of(2, {1}), PointSet::of(2, {1}))) == PointSet::full(4));
  CHECK(p.space.closure(rectangle(PointSet(2), PointSet::full(2))) == PointSet(4));
  CHECK(check_pi(s, s).pass());
  const auto r = check_pi(discrete_space(2), discrete_space(3));
  CHECK(r.pass());
  CHECK(r.find("pi_equality")->checked == 32);
  CHECK_THROWS_AS(check_pi(discrete_space(8), discrete_space(8), CheckBudget{1000, 1}), Error);
}

TEST_CASE("lax morphisms") {
  const auto s = sierpinski_space();
  CHECK(is_lax_morphism(TotalMap::identity(s)).lax);
  const auto swap = is_lax_morphism(TotalMap(s, s, {1, 0}));
  CHECK_FALSE(swap.lax);
  REQUIRE(swap.witness.has_value());
  // Replay: for A = {0}, cl(f^-1 A) = {0,1} is not inside f^-1(cl A) = {1}.
  CHECK(*swap.witness == PointSet::of(2, {0}));
  const TotalMap f(s, s, {1, 0});
  CHECK_FALSE(s.closure(f.preimage(*swap.witness)).is_subset_of(f.preimage(s.closure(*swap.witness))));

  const auto p = product(s, s);
  for (const auto& proj : {p.left, p.right}) {
    const auto r = is_lax_morphism(proj);
    CHECK(r.lax);
    CHECK(r.equality);
  }
  CHECK(is_lax_morphism(PartialMap::partial_identity(s, PointSet::of(2, {1}))).lax);
}

TEST_CASE("relation algebra") {
  const auto d = discrete_space(2);
  const auto r = Relation::from_pairs(d, d, {{0, 1}});
  const auto s = Relation::from_pairs(d, d, {{1, 0}});
  CHECK(compose(Relation::identity(d), r) == r);
  CHECK(compose(r, s).pairs() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}});
  CHECK(converse(converse(r)) == r);
  CHECK(image(Relation::empty(d, d), d.full_set()) == PointSet(2));
  CHECK(image(r, PointSet::of(2, {0})) == PointSet::of(2, {1}));
  CHECK(preimage(r, PointSet::of(2, {1})) == PointSet::of(2, {0}));
  const auto c = chain_space(3);
  const TotalMap f(c, c, {0, 0, 2});
  for_each_subset(3, [&](const PointSet& a) { CHECK(image(graph(f), a) == f.image(a)); });
  CHECK_THROWS_AS(compose(r, Relation::identity(c)), Error);
}

TEST_CASE("partial images") {
  const auto s = sierpinski_space();
  const auto f = PartialMap::partial_identity(s, PointSet::of(2, {1}));
  CHECK(pm_images(f, s.full_set(), s.full_set()).inverse == PointSet::of(2, {1}));
  CHECK(pm_images(f, s.full_set(), s.full_set()).direct == PointSet::of(2, {1}));
  const auto e = PartialMap::empty(s, s);
  const auto ie = pm_images(e, s.full_set(), s.full_set());
  CHECK(ie.direct.none());
  CHECK(ie.inverse.none());
  const TotalMap g(chain_space(3), s, {0, 1, 1});
  const auto pg = PartialMap::from_total(g);
  for_each_subset(3, [&](const PointSet& a) {
    for_each_subset(2, [&](const PointSet& b) {
      const auto im = pm_images(pg, a, b);
      CHECK(im.direct == g.image(a));
      CHECK(im.inverse == g.preimage(b));
    });
  });
  CHECK_THROWS_AS(PartialMap::from_relation(Relation::from_pairs(s, s, {{0, 0}, {0, 1}})), Error);
}

TEST_CASE("product relations") {
  const auto c = chain_space(3);
  const auto s = sierpinski_space();
  const TotalMap f(c, s, {0, 1, 1});
  const TotalMap g(s, c, {0, 2});
  const auto pf = product(c, s);
  const auto pt = product(s, c);
  std::vector<std::size_t> fg;
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 0; y < 2; ++y) fg.push_back(pair_index(f(x), g(y), 3));
  }
  CHECK(product_rel(graph(f), graph(g)) == graph(TotalMap(pf.space, pt.space, fg)));
  CHECK(product_rel(graph(f), Relation::empty(s, s)).size() == 0);
  const auto r = Relation::from_pairs(c, c, {{0, 1}, {2, 2}});
  const auto q = Relation::from_pairs(s, s, {{0, 0}, {1, 0}, {1, 1}});
  CHECK(product_rel(r, q).size() == r.size() * q.size());
}

TEST_CASE("continuity of partial maps and relations") {
  const auto s = sierpinski_space();
  CHECK(is_continuous_partial(PartialMap::partial_identity(s, PointSet::of(2, {1}))));
  const auto d = discrete_space(2);
  CHECK(is_continuous_relation(Relation::from_pairs(d, d, {{0, 1}})));
  const auto swap = PartialMap::from_total(TotalMap(s, s, {1, 0}));
  CHECK_FALSE(is_continuous_partial(swap));
  const auto w = partial_continuity_witness(swap);
  REQUIRE(w.has_value());
  // f cl(f^-1 {0}) = f {0,1} = {0,1}, which escapes cl {0} = {0}.
  CHECK(*w == PointSet::of(2, {0}));
  const auto im = pm_images(swap, s.closure(pm_images(swap, s.full_set(), *w).inverse), s.full_set()).direct;
  CHECK_FALSE(im.is_subset_of(s.closure(*w)));
}
