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
#include "topocat/relseq.hpp"

using namespace topocat;

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

Preorder two_chain() { return Preorder::from_pairs(2, {{0, 0}, {1, 1}, {0, 1}}); }

SeqMorphism identity_morphism(const RelSeq& s) {
  SeqMorphism m;
  for (std::size_t i = 0; i < s.depth(); ++i) {
    std::vector<std::size_t> id(s.stage(i).size());
    for (std::size_t k = 0; k < id.size(); ++k) id[k] = k;
    m.maps.push_back(id);
  }
  return m;
}

}  // namespace

TEST_CASE("poset sequences keep the order at every pair of stages") {
  const auto s = from_poset({"a", "b"}, two_chain(), 3);
  CHECK(s.depth() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) CHECK(s.rel(i, j).pairs() == Pairs{{0, 0}, {0, 1}, {1, 1}});
  }
  CHECK(validate(s).pass());
}

TEST_CASE("metric sequences") {
  const std::vector<std::vector<Rational>> d{{Rational::parse("0"), Rational::parse("1")},
                                             {Rational::parse("1"), Rational::parse("0")}};
  const auto s = from_metric({"p", "q"}, d, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) CHECK(s.rel(i, j) == BinaryRelation::identity(2));
  }
  CHECK(validate(s).pass());
  CHECK(colimit(s).space.same_topology(discrete_space(2)));

  const std::vector<std::vector<Rational>> asym{{Rational::parse("0"), Rational::parse("1/2")},
                                                {Rational::parse("1"), Rational::parse("0")}};
  try {
    from_metric({"p", "q"}, asym, 2);
    FAIL("asymmetric distance accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadMetric);
  }
  CHECK(Rational::parse("2/4") == Rational::parse("1/2"));
  CHECK(Rational::parse("1/3") <= Rational::parse("1/2"));
  CHECK_FALSE(Rational::parse("1/2") <= Rational::parse("1/3"));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
}

TEST_CASE("validation reports a missing composite pair") {
  CHECK(validate(constant_full_seq({"p"}, 3)).pass());
  auto s = from_poset({"a", "b"}, two_chain(), 3);
  s.set_rel(0, 2, BinaryRelation::identity(2));
  const auto r = validate(s);
  CHECK_FALSE(r.pass());
  const auto* comp = r.find("composition");
  REQUIRE(comp != nullptr);
  CHECK_FALSE(comp->pass);
  CHECK_FALSE(comp->witness.empty());
}

TEST_CASE("colimits") {
  const auto c = colimit(from_poset({"a", "b"}, two_chain(), 3));
  CHECK(c.space.same_topology(sierpinski_space()));
  CHECK(c.space.is_open(PointSet::of(2, {1})));
  CHECK(c.space.closure(PointSet::of(2, {1})) == PointSet::full(2));
  CHECK(colimit(constant_full_seq({"p"}, 2)).space.size() == 1);
}

TEST_CASE("poset colimits coincide with the up-set topology") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& t : enumerate_topologies(n, {EnumerationStrategy::Preorders, 4})) {
      const auto order = specialization_preorder(t);
      for (std::size_t depth = 1; depth <= 3; ++depth) {
        CHECK(colimit(from_poset(t.points(), order, depth)).space.same_topology(t));
      }
    }
  }
}

TEST_CASE("products of sequences") {
  const auto s = from_poset({"a", "b"}, two_chain(), 3);
  const auto one = constant_full_seq({"p"}, 3);
  const auto sp = seq_product(s, one);
  CHECK(colimit(sp).space.same_topology(colimit(s).space));
  const auto k = from_poset({"x", "y", "z"}, specialization_preorder(chain_space(3)), 3);
  const auto sk = seq_product(s, k);
  for (std::size_t i = 0; i < 3; ++i) CHECK(sk.stage(i).size() == 6);
  CHECK(colimit(sk).space.same_topology(product(sierpinski_space(), chain_space(3)).space));
  CHECK(check_product_preservation(s, s).pass());
  CHECK(colimit(seq_product(s, s)).space.same_topology(product(sierpinski_space(), sierpinski_space()).space));
  CHECK_THROWS_AS(seq_product(s, constant_full_seq({"p"}, 2)), Error);
}

TEST_CASE("embeddings and equalizers are preserved") {
  const auto s = from_poset({"a"}, Preorder::discrete(1), 3);
  const auto t = from_poset({"a", "b"}, two_chain(), 3);
  const SeqMorphism m{{{1}, {1}, {1}}};
  CHECK(validate_morphism(s, t, m).pass());
  CHECK(is_embedding_morphism(s, t, m));
  CHECK(check_embedding_preservation(s, t, m).pass());
  CHECK(is_continuous(colimit_map(colimit(s), colimit(t), m)));

  const auto id = identity_morphism(t);
  const auto eq = seq_equalizer(t, t, id, id);
  for (std::size_t i = 0; i < t.depth(); ++i) CHECK(eq.seq.stage(i).size() == t.stage(i).size());
  CHECK(check_equalizer_preservation(t, t, id, id).pass());
}

TEST_CASE("basis properties on seeded sequences") {
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const auto s = random_relseq(rng);
    CHECK(validate(s).pass());
    CHECK(check_basis(s).pass());
  }
}

TEST_CASE("stabilisation diagnostics") {
  const auto j = stabilization(from_poset({"a", "b"}, two_chain(), 3));
  CHECK(j.contains("depth"));
  CHECK(j["depth"] == 3);
}
