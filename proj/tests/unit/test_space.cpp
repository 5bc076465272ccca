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

#include <set>

#include "topocat/error.hpp"
#include "topocat/space.hpp"

using namespace topocat;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInput;
}

std::set<std::uint64_t> open_masks(const FiniteSpace& x) {
  std::set<std::uint64_t> out;
  for (const auto& u : x.opens()) out.insert(u.to_mask());
  return out;
}

}  // namespace

TEST_CASE("from_opens builds the two-point space with one open point") {
  const auto s = FiniteSpace::from_opens({"0", "1"}, {PointSet(2), PointSet::of(2, {1}), PointSet::full(2)});
  CHECK(s.same_topology(sierpinski_space()));
  CHECK(s.is_open(PointSet::of(2, {1})));
  CHECK_FALSE(s.is_open(PointSet::of(2, {0})));
}

TEST_CASE("from_opens rejects families that are not topologies") {
  CHECK(kind_of([] { FiniteSpace::from_opens({"a"}, {PointSet(1)}); }) == ErrorKind::NotATopology);
  CHECK(kind_of([] {
          FiniteSpace::from_opens({"a", "b", "c"},
                                  {PointSet(3), PointSet::of(3, {0}), PointSet::of(3, {1}), PointSet::full(3)});
        }) == ErrorKind::NotATopology);
  CHECK(kind_of([] { FiniteSpace::from_opens({"a", "a"}, {PointSet(2), PointSet::full(2)}); }) ==
        ErrorKind::InvalidInput);
}

TEST_CASE("from_opens with every subset is discrete") {
  const auto d = FiniteSpace::from_opens(
      {"a", "b"}, {PointSet(2), PointSet::of(2, {0}), PointSet::of(2, {1}), PointSet::full(2)});
  CHECK(d.same_topology(discrete_space(2)));
}

TEST_CASE("from_subbasis generates under finite meets and unions") {
  const auto s = FiniteSpace::from_subbasis({"a", "b"}, {PointSet::of(2, {1})});
  CHECK(open_masks(s) == std::set<std::uint64_t>{0b00, 0b10, 0b11});
  CHECK(open_masks(FiniteSpace::from_subbasis({"a"}, {})) == std::set<std::uint64_t>{0, 1});
  const auto d = FiniteSpace::from_subbasis({"a", "b"}, {PointSet::of(2, {0}), PointSet::of(2, {1})});
  CHECK(d.same_topology(discrete_space(2)));
}

TEST_CASE("closure and interior") {
  const auto s = sierpinski_space();
  CHECK(s.closure(PointSet::of(2, {1})) == PointSet::full(2));
  CHECK(s.closure(PointSet::of(2, {0})) == PointSet::of(2, {0}));
  CHECK(s.interior(PointSet::of(2, {0})) == PointSet(2));
  for (const auto& x : {point_space(), sierpinski_space(), chain_space(3), indiscrete_space(3)}) {
    CHECK(x.closure(x.empty_set()) == x.empty_set());
  }
  CHECK(discrete_space(2).closure(PointSet::of(2, {0})) == PointSet::of(2, {0}));
  CHECK(chain_space(3).closure(PointSet::of(3, {1})) == PointSet::of(3, {0, 1}));
}

TEST_CASE("products") {
  const auto p = product(sierpinski_space(), sierpinski_space());
  CHECK(p.space.size() == 4);
  CHECK(p.space.opens().size() == 6);
  CHECK(is_continuous(p.left));
  CHECK(is_continuous(p.right));
  CHECK(product(discrete_space(2), discrete_space(2)).space.same_topology(discrete_space(4)));
  const auto c = chain_space(3);
  CHECK(product(c, point_space()).space.opens().size() == c.opens().size());
  CHECK(p.space.closure(rectangle(PointSet::of(2, {1}), PointSet::of(2, {1}))) == PointSet::full(4));
}

TEST_CASE("subspaces") {
  const auto s = sierpinski_space();
  CHECK(subspace(s, PointSet::full(2)).space.same_topology(s));
  const auto one = subspace(s, PointSet::of(2, {0}));
  CHECK(one.space.size() == 1);
  CHECK(one.space.name(0) == "0");
  CHECK(is_embedding(one.inclusion));
  CHECK(subspace(s, PointSet(2)).space.size() == 0);
}

TEST_CASE("continuity with witness") {
  const auto s = sierpinski_space();
  CHECK(is_continuous(TotalMap::identity(s)));
  const TotalMap swap(s, s, {1, 0});
  const auto w = continuity_witness(swap);
  REQUIRE(w.has_value());
  CHECK(*w == PointSet::of(2, {1}));
  CHECK_FALSE(s.is_open(swap.preimage(*w)));
  CHECK(is_continuous(TotalMap::constant(chain_space(3), s, 1)));
  CHECK(is_continuous(TotalMap::constant(s, discrete_space(3), 2)));
}

TEST_CASE("surjection/embedding factorisation") {
  const auto d = discrete_space(2);
  const auto f = TotalMap::constant(d, d, 0);
  const auto fz = factorize(f);
  CHECK(fz.surjection.target().size() == 1);
  CHECK(fz.surjection.is_surjective());
  CHECK(fz.embedding.image(fz.embedding.source().full_set()) == PointSet::of(2, {0}));
  CHECK(then(fz.surjection, fz.embedding) == f);

  const auto id = factorize(TotalMap::identity(chain_space(3)));
  CHECK(id.surjection.values() == std::vector<std::size_t>{0, 1, 2});
  CHECK(id.embedding.values() == std::vector<std::size_t>{0, 1, 2});

  const auto inc = subspace(sierpinski_space(), PointSet::of(2, {1})).inclusion;
  const auto fi = factorize(inc);
  CHECK(fi.surjection.values() == std::vector<std::size_t>{0});
  CHECK(fi.embedding.values() == inc.values());

  CHECK(kind_of([] {
          const auto s = sierpinski_space();
          factorize(TotalMap(s, s, {1, 0}));
        }) == ErrorKind::NotContinuous);
}

TEST_CASE("embeddings") {
  CHECK(is_embedding(subspace(chain_space(3), PointSet::of(3, {0, 2})).inclusion));
  CHECK_FALSE(is_embedding(TotalMap(discrete_space(2), indiscrete_space(2), {0, 1})));
  CHECK_FALSE(is_embedding(TotalMap::constant(discrete_space(2), discrete_space(2), 1)));
  CHECK(is_homeomorphism(TotalMap::identity(sierpinski_space())));
  CHECK_FALSE(is_homeomorphism(TotalMap(discrete_space(2), indiscrete_space(2), {0, 1})));
}

TEST_CASE("hausdorff") {
  CHECK(is_hausdorff(discrete_space(2)));
  CHECK_FALSE(is_hausdorff(sierpinski_space()));
  CHECK(is_hausdorff(point_space()));
  CHECK_FALSE(is_hausdorff(indiscrete_space(2)));
}

TEST_CASE("topology counts agree across strategies") {
  const std::vector<std::size_t> expected{1, 1, 4, 29, 355};
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto fam = enumerate_topologies(n, {EnumerationStrategy::Families, 4});
    const auto pre = enumerate_topologies(n, {EnumerationStrategy::Preorders, 4});
    CHECK(fam.size() == expected[n]);
    CHECK(pre.size() == expected[n]);
    std::set<std::vector<std::uint64_t>> a, b;
    for (const auto& x : fam) {
      const auto m = open_masks(x);
      a.insert({m.begin(), m.end()});
    }
    for (const auto& x : pre) {
      const auto m = open_masks(x);
      b.insert({m.begin(), m.end()});
    }
    CHECK(a == b);
    CHECK(a.size() == expected[n]);
  }
  CHECK(kind_of([] { enumerate_topologies(5); }) == ErrorKind::CapExceeded);
}

TEST_CASE("preorders and the specialisation order") {
  const auto chain = Preorder::from_pairs(2, {{0, 0}, {1, 1}, {0, 1}});
  const auto x = alexandroff_from_preorder({"a", "b"}, chain);
  CHECK(x.same_topology(sierpinski_space()));
  CHECK(specialization_preorder(x) == chain);
  CHECK(kind_of([] { Preorder::from_pairs(2, {{0, 1}}); }) == ErrorKind::NotAPreorder);
  CHECK(kind_of([] { Preorder::from_pairs(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}); }) ==
        ErrorKind::NotAPreorder);
  for (const auto& t : enumerate_topologies(3)) {
    CHECK(alexandroff_from_preorder(t.points(), specialization_preorder(t)) == t);
  }
}

TEST_CASE("neighbourhoods determine the space") {
  for (const auto& t : enumerate_topologies(3)) {
    std::vector<PointSet> n;
    for (std::size_t i = 0; i < t.size(); ++i) n.push_back(t.neighborhood(i));
    CHECK(FiniteSpace::from_neighborhoods(t.points(), n) == t);
  }
  CHECK(kind_of([] { FiniteSpace::from_neighborhoods({"a", "b"}, {PointSet::of(2, {1}), PointSet::of(2, {1})}); }) ==
        ErrorKind::NotATopology);
}
