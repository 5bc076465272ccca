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
#include "topocat/io.hpp"
#include "topocat/synt.hpp"

using namespace topocat;

namespace {

PartialMap pmap(const FiniteSpace& x, const FiniteSpace& y, std::vector<std::optional<std::size_t>> v) {
  return PartialMap(x, y, std::move(v));
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("composition and identities") {
  const auto k = chain_space(3);
  const auto s = sierpinski_space();
  const auto a = SyntObj::make(k, PointSet::of(3, {0, 2}));
  const auto b = SyntObj::whole(s);
  const auto f = SyntMap::make(a, b, pmap(k, s, {0, std::nullopt, 1}));
  CHECK(compose(identity(a), f) == f);
  CHECK(compose(f, identity(b)) == f);

  const auto g = SyntMap::make(b, SyntObj::whole(k), pmap(s, k, {0, 2}));
  const auto gf = compose(f, g);
  CHECK(gf.pm.values() == std::vector<std::optional<std::size_t>>{0, std::nullopt, 2});

  const auto none = SyntObj::make(k, PointSet(3));
  const auto e = SyntMap::make(none, a, PartialMap::empty(k, k));
  CHECK(compose(e, identity(a)).pm.domain().none());
  CHECK(kind_of([&] { compose(g, g); }) == ErrorKind::TypeMismatch);
}

TEST_CASE("map validation") {
  const auto s = sierpinski_space();
  const auto w = SyntObj::whole(s);
  CHECK(kind_of([&] { SyntMap::make(w, w, pmap(s, s, {1, 0})); }) == ErrorKind::NotContinuous);
  CHECK(kind_of([&] { SyntMap::make(w, w, pmap(s, s, {0, std::nullopt})); }) == ErrorKind::InvalidInput);
  const auto top = SyntObj::make(s, PointSet::of(2, {1}));
  CHECK(kind_of([&] { SyntMap::make(w, top, pmap(s, s, {0, 1})); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { io::read_universe(Json("universe_discontinuous.json"), TOPOCAT_DATA_DIR); }) ==
        ErrorKind::NotContinuous);
}

TEST_CASE("products and equalizers") {
  const auto k = chain_space(3);
  const auto a = SyntObj::make(k, PointSet::of(3, {1, 2}));
  const auto p = product_obj(a, SyntObj::whole(point_space()));
  CHECK(p.object.space.same_topology(k));
  CHECK(p.object.pred.count() == 2);
  CHECK(is_m_map(p.left));

  const auto s = sierpinski_space();
  const auto b = SyntObj::whole(s);
  const auto f = SyntMap::make(a, b, pmap(k, s, {std::nullopt, 0, 1}));
  const auto same = equalizer_obj(f, f);
  CHECK(same.object == a);
  const auto c0 = SyntMap::make(a, b, pmap(k, s, {std::nullopt, 0, 0}));
  const auto c1 = SyntMap::make(a, b, pmap(k, s, {std::nullopt, 1, 1}));
  CHECK(equalizer_obj(c0, c1).object.pred.none());
  const auto pr = product_obj(a, b);
  const auto paired = pairing(pr, identity(a), c1);
  CHECK(compose(paired, pr.left) == identity(a));
  CHECK(compose(paired, pr.right) == c1);
}

TEST_CASE("image factorisation") {
  const auto d = discrete_space(2);
  const auto s = sierpinski_space();
  const auto c = SyntMap::make(SyntObj::whole(d), SyntObj::whole(s), pmap(d, s, {1, 1}));
  const auto fc = factorize_cont(c);
  CHECK(fc.surjection.to.pred == PointSet::of(2, {1}));
  CHECK(is_e_map(fc.surjection));
  CHECK(is_m_map(fc.inclusion));
  CHECK(compose(fc.surjection, fc.inclusion) == c);

  const auto inc = SyntMap::make(SyntObj::make(s, PointSet::of(2, {1})), SyntObj::whole(s),
                                 PartialMap::partial_identity(s, PointSet::of(2, {1})));
  CHECK(is_m_map(inc));
  const auto fi = factorize_cont(inc);
  CHECK(fi.surjection == identity(inc.from));
  CHECK(fi.inclusion == inc);

  const auto surj = SyntMap::make(SyntObj::whole(chain_space(3)), SyntObj::whole(s),
                                  pmap(chain_space(3), s, {0, 1, 1}));
  CHECK(is_e_map(surj));
  const auto fs = factorize_cont(surj);
  CHECK(fs.surjection == surj);
  CHECK(fs.inclusion == identity(surj.to));
}

TEST_CASE("relative diamond") {
  const auto k = chain_space(3);
  const auto phi = SyntObj::make(k, PointSet::of(3, {0, 2}));
  CHECK(rel_diamond(phi, PointSet::of(3, {2})) == PointSet::of(3, {0, 2}));
  CHECK(rel_diamond(phi, PointSet(3)).none());
  const auto whole = SyntObj::whole(k);
  for_each_subset(3, [&](const PointSet& psi) { CHECK(rel_diamond(whole, psi) == k.closure(psi)); });
  CHECK(kind_of([&] { rel_diamond(phi, PointSet::of(3, {1})); }) == ErrorKind::NotASubpredicate);
}

TEST_CASE("relative diamonds are S4 on every predicate of spaces up to three points") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& x : enumerate_topologies(n)) {
      for_each_subset(n, [&](const PointSet& pred) {
        const auto o = SyntObj::make(x, pred);
        const auto subs = sub_lattice(o);
        CHECK(subs.size() == (std::size_t{1} << pred.count()));
        for (const auto& a : subs) {
          const auto da = rel_diamond(o, a);
          CHECK(a.is_subset_of(da));
          CHECK(rel_diamond(o, da) == da);
          CHECK(rel_box(o, a) == pred - rel_diamond(o, pred - a));
          for (const auto& b : subs) CHECK(rel_diamond(o, a | b) == (da | rel_diamond(o, b)));
        }
        CHECK(rel_diamond(o, PointSet(n)).none());
      });
    }
  }
}

TEST_CASE("exhaustive universes satisfy every axiom") {
  const auto us = exhaustive_universe({sierpinski_space()});
  CHECK(us.objects.size() == 4);
  CHECK(us.maps.size() == 17);
  const auto rs = check_synt_axioms(us);
  CHECK(rs.pass());
  for (const auto& law : rs.laws()) CHECK(law.checked > 0);

  const auto uc = exhaustive_universe({chain_space(3)});
  CHECK(uc.objects.size() == 8);
  CHECK(uc.maps.size() == 123);
  CHECK(check_synt_axioms(uc).pass());
}

TEST_CASE("explicit universes are closed under identities") {
  const auto u = io::read_universe(Json("universe_small.json"), TOPOCAT_DATA_DIR);
  const auto r = check_synt_axioms(u);
  CHECK(r.pass());
  CHECK(r.find("subobject_lattice")->checked > 0);
}
