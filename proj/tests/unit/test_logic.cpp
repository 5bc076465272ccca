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
#include "topocat/logic.hpp"

using namespace topocat;

namespace {

Interpretation s2_model() {
  Signature sig;
  sig.add_sort("S");
  sig.add_predicate({"P", {"S", "S"}});
  sig.add_predicate({"U", {"S"}});
  Interpretation m(sig);
  m.set_sort("S", sierpinski_space());
  m.set_predicate("P", PointSet::of(4, {pair_index(0, 1, 2)}));
  m.set_predicate("U", PointSet::of(2, {1}));
  m.validate();
  return m;
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

// Preimage of `a` under the projection that forgets the last variable.
PointSet weaken(const PointSet& a, std::size_t last) {
  PointSet out(a.universe() * last);
  a.for_each([&](std::size_t i) {
    for (std::size_t k = 0; k < last; ++k) out.set(i * last + k);
  });
  return out;
}

Formula F(const std::string& s) { return parse_formula(s); }

}  // namespace

TEST_CASE("parsing") {
  CHECK(F("dia P(x)") == Formula::dia(Formula::atom({"P", {}}, {Term::var("x")})));
  CHECK(F("(dia box P)(x, y)") ==
        Formula::atom({"P", {Modality::Dia, Modality::Box}}, {Term::var("x"), Term::var("y")}));
  const auto q = F("exists y:S. P(x) & Q(y)");
  REQUIRE(q.kind == Formula::Kind::Exists);
  CHECK(q.kids[0].kind == Formula::Kind::And);
  CHECK(F("a() = f(x) -> P(x) | Q(x) -> R(x)").kind == Formula::Kind::Implies);
  CHECK(F("a() = f(x) -> P(x) | Q(x) -> R(x)").kids[1].kind == Formula::Kind::Implies);
  try {
    F("P(x) & dia");
    FAIL("dangling modality accepted");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 7);
  }
  CHECK_THROWS_AS(F("P(x"), SyntaxError);
  CHECK_THROWS_AS(F("exists x. P(x)"), SyntaxError);
  const auto [l, r] = parse_sequent("dia P(x) |- P(x)");
  CHECK(l.kind == Formula::Kind::Dia);
  CHECK(r.kind == Formula::Kind::Atom);
}

TEST_CASE("context inference and sort errors") {
  Signature sig;
  sig.add_sort("S");
  sig.add_sort("T");
  sig.add_predicate({"P", {"S"}});
  sig.add_predicate({"Q", {"T"}});
  const auto ctx = infer_context(sig, F("exists y:T. P(x) & Q(y)"));
  CHECK(ctx == Context{{"x", "S"}});
  CHECK(kind_of([&] { infer_context(sig, F("P(x) & Q(x)")); }) == ErrorKind::SortError);
  CHECK(kind_of([&] { infer_context(sig, F("Z(x)")); }) == ErrorKind::SortError);

  const auto m = s2_model();
  CHECK(kind_of([&] { eval(m, F("U(x)"), {}); }) == ErrorKind::UnboundVariable);
  CHECK_THROWS_AS(eval(m, F("U(x)"), {{"x", "Nope"}}), Error);
  Rng rng(1);
  const auto rm = random_model(rng, 2);
  CHECK(kind_of([&] { eval(rm, F("P(x)"), {{"x", "Y"}}); }) == ErrorKind::SortMismatch);
}

TEST_CASE("evaluation examples") {
  const auto m = s2_model();
  const Context x{{"x", "S"}};
  CHECK(eval(m, F("dia U(x)"), x) == PointSet::full(2));
  CHECK(eval(m, F("U(x) & ~U(x)"), x).none());
  CHECK(eval(m, F("dia P(x,x)"), x).none());
  CHECK(eval(m, F("(dia P)(x,x)"), x) == PointSet::of(2, {0}));
  CHECK(eval(m, F("box U(x)"), x) == PointSet::of(2, {1}));
  CHECK(eval(m, F("exists y:S. P(x,y)"), x) == PointSet::of(2, {0}));
  CHECK(eval(m, F("forall y:S. P(x,y) | ~P(x,y)"), x) == PointSet::full(2));
}

TEST_CASE("sequents") {
  const auto m = s2_model();
  const Context x{{"x", "S"}};
  CHECK(check_sequent(m, F("dia P(x,x)"), F("(dia P)(x,x)"), x).holds);
  const auto bad = check_sequent(m, F("(dia P)(x,x)"), F("dia P(x,x)"), x);
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.counterexample.has_value());
  CHECK(*bad.counterexample == std::vector<std::pair<std::string, std::string>>{{"x", "0"}});
  CHECK(check_sequent(m, F("U(x)"), F("U(x)"), x).holds);
}

TEST_CASE("the logical product law holds in both directions") {
  Rng rng(41);
  const Context xy{{"x", "X"}, {"y", "Y"}};
  for (int t = 0; t < 100; ++t) {
    const auto m = random_model(rng, 3);
    const auto l = F("dia P(x) & dia Q(y)");
    const auto r = F("dia (P(x) & Q(y))");
    CHECK(check_sequent(m, l, r, xy).holds);
    CHECK(check_sequent(m, r, l, xy).holds);
  }
}

TEST_CASE("substitution semi-commutes with the diamond") {
  Rng rng(43);
  const Context x{{"x", "X"}};
  const Context xy{{"x", "X"}, {"y", "Y"}};
  for (int t = 0; t < 100; ++t) {
    const auto m = random_model(rng, 3);
    CHECK(check_sequent(m, F("dia Q(f(x))"), F("(dia Q)(f(x))"), x).holds);
    CHECK(check_sequent(m, F("dia R(x,x)"), F("(dia R)(x,x)"), x).holds);
    // A partial term only commutes laxly inside its domain of definition.
    CHECK(check_sequent(m, F("dia P(g(x,y)) & g(x,y) = g(x,y)"), F("(dia P)(g(x,y))"), xy).holds);
  }
}

TEST_CASE("quantifier adjunction, Frobenius, Beck-Chevalley and weakening") {
  Rng rng(47);
  const Signature sig = sample_signature();
  const Context x{{"x", "X"}};
  const Context xy{{"x", "X"}, {"y", "Y"}};
  const Context xx{{"x", "X"}, {"z", "X"}};
  const Context xyw{{"x", "X"}, {"y", "Y"}, {"w", "Y"}};
  for (int t = 0; t < 60; ++t) {
    const auto m = random_model(rng, 3);
    const std::size_t ny = m.sort("Y").size();
    const std::size_t nx = m.sort("X").size();
    const Formula phi = random_formula(rng, sig, xy, 2);
    const Formula psi_x = random_formula(rng, sig, x, 2);
    const PointSet ex = eval(m, Formula::exists("y", "Y", phi), x);
    const PointSet body = eval(m, phi, xy);

    for_each_subset(nx, [&](const PointSet& psi) {
      CHECK(ex.is_subset_of(psi) == body.is_subset_of(weaken(psi, ny)));
    });

    const auto lhs = eval(m, Formula::exists("y", "Y", Formula::conj(psi_x, phi)), x);
    const auto rhs = eval(m, Formula::conj(psi_x, Formula::exists("y", "Y", phi)), x);
    CHECK(lhs == rhs);

    CHECK(eval(m, Formula::exists("y", "Y", phi), {{"x", "X"}, {"w", "Y"}}) == weaken(ex, ny));

    const Formula on_z = random_formula(rng, sig, {{"z", "X"}}, 2);
    const auto renamed = eval(m, Formula::exists("z", "X", Formula::conj(F("x = z"), on_z)), x);
    CHECK(renamed == eval(m, on_z, {{"z", "X"}}));

    const auto two = eval(m, F("R(x,z)"), xx);
    PointSet diag(nx);
    for (std::size_t i = 0; i < nx; ++i) {
      if (two.test(pair_index(i, i, nx))) diag.set(i);
    }
    CHECK(eval(m, F("R(x,x)"), x) == diag);

    const auto d1 = eval(m, Formula::dia(phi), xyw);
    CHECK(d1 == weaken(eval(m, Formula::dia(phi), xy), ny));
  }
}

TEST_CASE("partial terms are false where undefined") {
  Rng rng(53);
  for (int t = 0; t < 40; ++t) {
    const auto m = random_model(rng, 3);
    const Context xy{{"x", "X"}, {"y", "Y"}};
    const auto defined = eval(m, F("g(x,y) = g(x,y)"), xy);
    CHECK(defined == m.function("g").domain());
    CHECK(eval(m, F("P(g(x,y))"), xy).is_subset_of(defined));
  }
}

TEST_CASE("embeddings come with their partial inverse") {
  const auto m = io::read_model(Json("model_two_sorts.json"), TOPOCAT_DATA_DIR);
  const auto* inv = m.signature().function("e_inv");
  REQUIRE(inv != nullptr);
  CHECK(inv->kind == FunctionKind::Partial);
  const Context x{{"x", "X"}};
  CHECK(eval(m, F("exists y:Y. e(y) = x"), x) == PointSet::of(3, {1, 2}));
  CHECK(eval(m, F("e(e_inv(x)) = x"), x) == PointSet::of(3, {1, 2}));
}

TEST_CASE("print and parse round-trip") {
  Rng rng(59);
  const Signature sig = sample_signature();
  const Context ctx{{"x", "X"}, {"y", "Y"}};
  for (int t = 0; t < 1000; ++t) {
    const Formula f = random_formula(rng, sig, ctx, 4);
    const std::string text = print_formula(f);
    const Formula g = parse_formula(text);
    CHECK(g == f);
    CHECK(print_formula(g) == text);
  }
}
