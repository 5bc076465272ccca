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


// Acceptance run: one PASS/FAIL line per criterion with wall time. Every
// criterion also yields a JSON summary without timings; the last criterion
// runs the others twice and compares those summaries byte for byte.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "topocat/complete.hpp"
#include "topocat/logic.hpp"
#include "topocat/loops.hpp"
#include "topocat/modal.hpp"
#include "topocat/relseq.hpp"
#include "topocat/synt.hpp"

using namespace topocat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  Json summary = Json::object();
};

// Records the first failure only; later ones are counted.
struct Tally {
  Outcome& out;
  std::uint64_t failures = 0;
  void require(bool ok, const std::string& what, const Json& witness = Json::object()) {
    if (ok) return;
    if (failures++ == 0) {
      out.pass = false;
      out.detail = what;
      out.summary["first_failure"] = {{"what", what}, {"witness", witness}};
    }
  }
  void require_report(const Report& r, const std::string& what) {
    if (r.pass()) return;
    for (const auto& law : r.laws()) {
      if (!law.pass) {
        require(false, what + ": " + law.law, law.witness);
        return;
      }
    }
  }
};

std::set<std::vector<std::uint64_t>> topology_keys(const std::vector<FiniteSpace>& spaces) {
  std::set<std::vector<std::uint64_t>> out;
  for (const auto& x : spaces) {
    std::vector<std::uint64_t> key;
    for (const auto& u : x.opens()) key.push_back(u.to_mask());
    out.insert(key);
  }
  return out;
}

Outcome kuratowski() {
  Outcome o;
  Tally t{o};
  const std::vector<std::size_t> expected{1, 1, 4, 29, 355};
  Json counts = Json::array();
  std::uint64_t views = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto fam = enumerate_topologies(n, {EnumerationStrategy::Families, 4});
    const auto pre = enumerate_topologies(n, {EnumerationStrategy::Preorders, 4});
    counts.push_back(fam.size());
    t.require(fam.size() == expected[n], "family count for n=" + std::to_string(n));
    t.require(pre.size() == expected[n], "preorder count for n=" + std::to_string(n));
    t.require(topology_keys(fam) == topology_keys(pre), "strategies disagree for n=" + std::to_string(n));
    for (const auto& x : fam) {
      const Report r = check_modal_s4(ModalAlgebraView::of(x));
      for (const auto& law : r.laws()) t.require(law.exhaustive, "non-exhaustive S4 sweep");
      t.require_report(r, "S4 law");
      ++views;
    }
  }
  o.summary["counts"] = counts;
  o.summary["spaces_checked"] = views;
  if (o.pass) o.detail = "counts 1,1,4,29,355; S4 and duality exact on " + std::to_string(views) + " spaces";
  return o;
}

Outcome product_law() {
  Outcome o;
  Tally t{o};
  std::vector<FiniteSpace> all;
  for (std::size_t n = 0; n <= 3; ++n) {
    for (auto& x : enumerate_topologies(n)) all.push_back(std::move(x));
  }
  std::uint64_t pairs = 0;
  std::uint64_t subset_pairs = 0;
  for (const auto& x : all) {
    for (const auto& y : all) {
      const Report r = check_pi(x, y);
      t.require_report(r, "product closure");
      subset_pairs += r.find("pi_equality")->checked;
      ++pairs;
    }
  }
  o.summary["space_pairs"] = pairs;
  o.summary["subset_pairs"] = subset_pairs;
  if (o.pass) o.detail = std::to_string(pairs) + " space pairs, " + std::to_string(subset_pairs) + " subset pairs";
  return o;
}

Outcome loop_law(std::uint64_t seed) {
  Outcome o;
  Tally t{o};
  Rng rng(seed);
  LoopGenOptions opt;
  opt.max_depth = 4;
  opt.max_points = 3;
  std::uint64_t subsets = 0;
  std::map<std::size_t, std::uint64_t> by_length;
  for (int k = 0; k < 10000; ++k) {
    const LoopExpr e = random_loop_expr(rng, opt);
    const Report r = lc_check(e);
    for (const auto& law : r.laws()) {
      t.require(law.exhaustive, "non-exhaustive loop sweep");
      subsets += law.checked;
    }
    t.require_report(r, "loop inequality");
    ++by_length[e.length()];
  }
  const auto d = discrete_space(2);
  const Loop bad{d, {Relation::from_pairs(d, d, {{0, 1}})}};
  const Report rb = lc_check_raw(bad);
  t.require(!rb.pass(), "raw loop unexpectedly passes");
  const Json w = rb.laws().empty() ? Json() : rb.laws().front().witness;
  t.require(w.contains("A") && w["A"] == Json::array({0}), "raw loop witness is not A={0}", w);
  Json lengths = Json::object();
  for (auto [len, cnt] : by_length) lengths[std::to_string(len)] = cnt;
  o.summary["loops"] = 10000;
  o.summary["subsets"] = subsets;
  o.summary["lengths"] = lengths;
  o.summary["raw_witness"] = w;
  if (o.pass) o.detail = "10000 loops exact, raw loop fails at A={0}";
  return o;
}

Outcome auxiliary(std::uint64_t seed) {
  Outcome o;
  Tally t{o};
  Rng rng(seed);
  LoopGenOptions opt;
  opt.total_only = true;
  const int count = 3000;
  for (int k = 0; k < count; ++k) {
    const LoopExpr e = random_loop_expr(rng, opt);
    const Loop loop = realize(e);
    const AuxSequence aux = auxiliary_sequence(e);
    t.require_report(validate_aux(loop, aux), "auxiliary invariants");
    const LawResult replay = replay_aux_all(loop, aux);
    const bool lc = lc_check(e).pass();
    t.require(replay.pass, "replayed chain fails", replay.witness);
    t.require(replay.pass == lc, "replay disagrees with the direct check");
  }
  o.summary["loops"] = count;
  if (o.pass) o.detail = std::to_string(count) + " total loops: invariants and replay agree";
  return o;
}

Outcome sequences(std::uint64_t seed) {
  Outcome o;
  Tally t{o};
  Rng rng(seed);
  RelSeqGenOptions opt;
  opt.max_points = 4;
  opt.max_depth = 4;
  const int count = 300;
  for (int k = 0; k < count; ++k) {
    const RelSeq s = random_relseq(rng, opt);
    t.require_report(validate(s), "sequence validity");
    t.require_report(check_basis(s), "basis properties");

    const SeqEqualizer sub = random_subsequence(rng, s);
    t.require(is_embedding_morphism(sub.seq, s, sub.inclusion), "generated inclusion is not an embedding");
    t.require_report(check_embedding_preservation(sub.seq, s, sub.inclusion), "embedding preservation");

    const RelSeq u = random_relseq(rng, s.depth(), 3);
    t.require_report(check_product_preservation(s, u), "product preservation");

    const std::size_t m = 1 + rng.below(3);
    std::vector<std::string> pts;
    for (std::size_t i = 0; i < m; ++i) pts.push_back("t" + std::to_string(i));
    const RelSeq target = constant_full_seq(pts, s.depth());
    std::vector<std::size_t> f(s.stage(s.depth() - 1).size()), g(f.size());
    for (auto& v : f) v = rng.below(m);
    for (auto& v : g) v = rng.below(m);
    t.require_report(check_equalizer_preservation(s, target, morphism_from_last(s, f), morphism_from_last(s, g)),
                     "equalizer preservation");
  }
  std::uint64_t orders = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& x : enumerate_topologies(n, {EnumerationStrategy::Preorders, 4})) {
      const Preorder p = specialization_preorder(x);
      for (std::size_t depth = 1; depth <= 4; ++depth) {
        t.require(colimit(from_poset(x.points(), p, depth)).space.same_topology(x),
                  "poset colimit differs from the up-set topology");
      }
      ++orders;
    }
  }
  o.summary["sequences"] = count;
  o.summary["preorders"] = orders;
  if (o.pass) o.detail = std::to_string(count) + " sequences, " + std::to_string(orders) + " preorders";
  return o;
}

Outcome closure(std::uint64_t seed) {
  Outcome o;
  Tally t{o};
  Rng rng(seed);
  BundleGenOptions opt;
  opt.max_stages = 3;
  opt.max_objects = 3;
  const int count = 200;
  std::uint64_t rejected = 0;
  std::uint64_t pairs = 0;
  for (int k = 0; k < count; ++k) {
    const Bundle b = random_bundle(rng, opt);
    const RelFamily fam = close_relations(b).family;
    t.require_report(validate_family(b, fam), "L1-L4 revalidation");
    t.require_report(verify_l5(b, fam), "L5");
    for (std::size_t x = 0; x < b.site.object_count(); ++x) {
      for (std::size_t i = 0; i < b.depth(); ++i) {
        for (std::size_t j = i + 1; j < b.depth(); ++j) pairs += fam.at(x, i, j).size();
      }
    }
    const auto bad = break_hypothesis(rng, b);
    if (!bad) continue;
    const auto w = find_hypothesis_violation(*bad);
    t.require(w.has_value(), "broken bundle not detected");
    if (!w) continue;
    const Symbol& sym = bad->site.symbols()[w->symbol];
    const PointSet pre =
        effective_base(*bad)[w->stage][sym.object].preimage(bad->stages[w->stage + 1].symbols[w->symbol]);
    t.require(pre.test(w->element) && !bad->stages[w->stage].symbols[*sym.diamond].test(w->element),
              "hypothesis witness does not replay");
    bool threw = false;
    try {
      close_relations(*bad);
    } catch (const HypothesisViolated&) {
      threw = true;
    }
    t.require(threw, "broken bundle accepted");
    ++rejected;
  }
  t.require(rejected > 0, "no hypothesis-violating bundles generated");
  o.summary["bundles"] = count;
  o.summary["pairs"] = pairs;
  o.summary["rejected"] = rejected;
  if (o.pass) {
    o.detail = std::to_string(count) + " bundles valid, " + std::to_string(rejected) + " broken ones rejected";
  }
  return o;
}

Outcome syntactic() {
  Outcome o;
  Tally t{o};
  Json checked = Json::object();
  for (const auto& [name, space] : {std::pair{"sierpinski", sierpinski_space()}, std::pair{"chain3", chain_space(3)}}) {
    const SyntUniverse u = exhaustive_universe({space});
    const Report r = check_synt_axioms(u);
    t.require_report(r, std::string(name) + " universe");
    Json laws = Json::object();
    for (const auto& law : r.laws()) laws[law.law] = law.checked;
    checked[name] = {{"objects", u.objects.size()}, {"maps", u.maps.size()}, {"laws", laws}};
  }
  o.summary["universes"] = checked;
  if (o.pass) o.detail = "two-point and three-chain universes pass every law";
  return o;
}

Outcome logic_suite(std::uint64_t seed) {
  Outcome o;
  Tally t{o};
  Rng rng(seed);
  const Context xy{{"x", "X"}, {"y", "Y"}};
  const Formula lhs = parse_formula("dia P(x) & dia Q(y)");
  const Formula rhs = parse_formula("dia (P(x) & Q(y))");
  for (int k = 0; k < 1000; ++k) {
    const Interpretation m = random_model(rng, 3);
    t.require(check_sequent(m, lhs, rhs, xy).holds, "product law, left to right");
    t.require(check_sequent(m, rhs, lhs, xy).holds, "product law, right to left");
  }

  Signature sig;
  sig.add_sort("S");
  sig.add_predicate({"P", {"S", "S"}});
  Interpretation s2(sig);
  s2.set_sort("S", sierpinski_space());
  s2.set_predicate("P", PointSet::of(4, {pair_index(0, 1, 2)}));
  s2.validate();
  const Context x{{"x", "S"}};
  const auto gap = check_sequent(s2, parse_formula("(dia P)(x,x)"), parse_formula("dia P(x,x)"), x);
  const bool witness_ok = !gap.holds && gap.counterexample &&
                          *gap.counterexample == std::vector<std::pair<std::string, std::string>>{{"x", "0"}};
  t.require(witness_ok, "diagonal gap witness is not x=0");
  t.require(check_sequent(s2, parse_formula("dia P(x,x)"), parse_formula("(dia P)(x,x)"), x).holds,
            "diagonal inclusion fails");

  const Signature sample = sample_signature();
  std::uint64_t chars = 0;
  for (int k = 0; k < 1000; ++k) {
    const Formula f = random_formula(rng, sample, xy, 4);
    const std::string text = print_formula(f);
    chars += text.size();
    t.require(parse_formula(text) == f, "round trip", Json{{"text", text}});
  }
  o.summary["models"] = 1000;
  o.summary["round_trips"] = 1000;
  o.summary["printed_chars"] = chars;
  o.summary["diagonal_witness"] = "x=0";
  if (o.pass) o.detail = "1000 models, diagonal gap at x=0, 1000 round trips";
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome(std::uint64_t)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"closure laws on all spaces up to 4 points", [](std::uint64_t) { return kuratowski(); }},
      {"product closure for spaces up to 3 points", [](std::uint64_t) { return product_law(); }},
      {"loop inequality on seeded acceptable loops", loop_law},
      {"auxiliary sequences of total loops", auxiliary},
      {"relational sequence colimits", sequences},
      {"relation closure and hypothesis rejection", closure},
      {"syntactic category axioms", [](std::uint64_t) { return syntactic(); }},
      {"logic product law, diagonal gap, round trips", logic_suite},
  };
  return all;
}

Json run_all(std::uint64_t seed, std::vector<Outcome>* outcomes, std::vector<double>* seconds) {
  Json report = Json::array();
  for (const auto& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(seed);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.push_back({{"criterion", c.name}, {"pass", o.pass}, {"summary", o.summary}});
    if (outcomes) outcomes->push_back(o);
    if (seconds) seconds->push_back(s);
  }
  return report;
}

void line(std::size_t index, bool pass, double seconds, const std::string& name, const std::string& detail) {
  std::printf("%s %zu  %-46s %8.2fs  %s\n", pass ? "PASS" : "FAIL", index, name.c_str(), seconds, detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : Rng::kDefaultSeed;
  std::vector<Outcome> outcomes;
  std::vector<double> seconds;
  const auto first_start = std::chrono::steady_clock::now();
  const std::string first = run_all(seed, &outcomes, &seconds).dump();
  const double first_total = std::chrono::duration<double>(std::chrono::steady_clock::now() - first_start).count();
  bool all = true;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    line(i + 1, outcomes[i].pass, seconds[i], criteria()[i].name, outcomes[i].detail);
    all = all && outcomes[i].pass;
  }

  const auto start = std::chrono::steady_clock::now();
  const std::string second = run_all(seed, nullptr, nullptr).dump();
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool same = first == second;
  line(9, same, s, "determinism of the full report",
       same ? "two runs, " + std::to_string(first.size()) + " identical bytes"
            : "reports differ");
  all = all && same;
  std::printf("%s  total %.2fs\n", all ? "ALL PASS" : "SOME FAILED", first_total + s);
  return all ? 0 : 1;
}
