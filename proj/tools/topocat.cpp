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


// topocat: command-line front end. Exit status 0 means every checked law
// held, 1 means a law failed (the witness is printed), 2 means a usage or
// input error.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "topocat/complete.hpp"
#include "topocat/io.hpp"
#include "topocat/logic.hpp"
#include "topocat/loops.hpp"
#include "topocat/modal.hpp"
#include "topocat/rel.hpp"
#include "topocat/relseq.hpp"
#include "topocat/report.hpp"
#include "topocat/rng.hpp"
#include "topocat/space.hpp"
#include "topocat/synt.hpp"

namespace {

using namespace topocat;
using io::Path;

struct Config {
  std::uint64_t seed = Rng::kDefaultSeed;
  std::optional<std::size_t> depth;
  std::uint64_t cap = std::uint64_t{1} << 20;
  std::string format = "human";

  std::vector<std::string> spaces;
  std::string file;
  std::string file2;
  std::string text;
  std::string context;
  std::size_t n = 0;
  std::size_t count = 1000;
  std::size_t length = 2;
  std::size_t max_points = 3;
  bool count_only = false;
  bool raw = false;
  bool trace = false;
  std::string strategy = "families";
  std::vector<std::string> seqs;
  std::string morphism;
  std::string morphism_g;
};

// What a command produces: laws (may be empty) and extra result data.
struct Outcome {
  Report report;
  Json result = Json::object();
  std::string human;  // printed before the law lines in human mode
};

Path base_dir() { return std::filesystem::current_path(); }

FiniteSpace load_space(const std::string& ref) { return io::read_space(Json(ref), base_dir()); }

Json load_file(const std::string& path) { return io::read_json_file(path); }

Path dir_of(const std::string& path) {
  const Path p = Path(path).parent_path();
  return p.empty() ? Path(".") : p;
}

Context parse_context(const std::string& text) {
  Context ctx;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::InvalidInput, "context entries look like x:S");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(' ');
      const auto b = s.find_last_not_of(' ');
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    ctx.emplace_back(trim(item.substr(0, colon)), trim(item.substr(colon + 1)));
    start = end + 1;
  }
  return ctx;
}

Json context_json(const Context& ctx) {
  Json out = Json::array();
  for (const auto& [v, s] : ctx) out.push_back(Json{{"var", v}, {"sort", s}});
  return out;
}

Bundle load_bundle(const Config& c) {
  Bundle b = io::read_bundle(load_file(c.file), dir_of(c.file));
  if (c.depth && *c.depth < b.depth()) b = truncate(b, *c.depth);
  return b;
}

// ---------------------------------------------------------------- commands

Outcome space_check(const Config& c) {
  const FiniteSpace x = load_space(c.spaces.at(0));
  Outcome o;
  o.report = check_modal_s4(ModalAlgebraView::of(x), CheckBudget{c.cap, c.seed});
  o.result = Json{{"points", x.size()}, {"opens", x.opens().size()}};
  o.human = std::to_string(x.size()) + " points, " + std::to_string(x.opens().size()) + " opens\n";
  return o;
}

Outcome space_closure(const Config& c) {
  const FiniteSpace x = load_space(c.spaces.at(0));
  const PointSet a = io::read_subset(Json::parse(c.text), x);
  Outcome o;
  o.result = Json{{"set", subset_json(a)}, {"closure", subset_json(x.closure(a))}, {"interior", subset_json(x.interior(a))}};
  o.human = "closure  " + x.closure(a).to_string() + "\ninterior " + x.interior(a).to_string() + "\n";
  return o;
}

Outcome space_enumerate(const Config& c) {
  EnumerationOptions opt;
  if (c.strategy == "preorders") {
    opt.strategy = EnumerationStrategy::Preorders;
    opt.max_points = 7;
  } else if (c.strategy == "families") {
    opt.max_points = 5;
  } else {
    throw Error(ErrorKind::InvalidInput, "strategy must be 'families' or 'preorders'");
  }
  Outcome o;
  std::size_t count = 0;
  Json spaces = Json::array();
  for_each_topology(c.n, opt, [&](const FiniteSpace& x) {
    ++count;
    if (!c.count_only) spaces.push_back(io::space_to_json(x));
  });
  o.result = Json{{"n", c.n}, {"count", count}};
  if (!c.count_only) o.result["spaces"] = spaces;
  o.human = std::to_string(count) + "\n";
  if (!c.count_only) {
    for (const auto& s : spaces) o.human += s.dump() + "\n";
  }
  return o;
}

Outcome space_hausdorff(const Config& c) {
  const FiniteSpace x = load_space(c.spaces.at(0));
  Outcome o;
  const bool h = is_hausdorff(x);
  o.result = Json{{"hausdorff", h}};
  o.human = std::string(h ? "hausdorff" : "not hausdorff") + "\n";
  return o;
}

Outcome modal_s4(const Config& c) {
  Outcome o;
  o.report = check_modal_s4(ModalAlgebraView::of(load_space(c.spaces.at(0))), CheckBudget{c.cap, c.seed});
  return o;
}

Outcome modal_pi(const Config& c) {
  if (c.spaces.size() != 2) throw Error(ErrorKind::InvalidInput, "modal pi takes exactly two --space options");
  Outcome o;
  o.report = check_pi(load_space(c.spaces[0]), load_space(c.spaces[1]), CheckBudget{c.cap, c.seed});
  return o;
}

Outcome rel_check(const Config& c) {
  const Relation r = io::read_relation(load_file(c.file), dir_of(c.file));
  Outcome o;
  LawResult cont{.law = "relation_continuity"};
  cont.checked = 1;
  if (auto w = relation_continuity_witness(r)) {
    cont.pass = false;
    cont.witness = Json{{"A", subset_json(*w)}};
  }
  o.report.add(cont);
  o.result = Json{{"pairs", r.size()}, {"functional", r.is_functional()}};
  if (r.is_functional()) {
    const PartialMap f = PartialMap::from_relation(r);
    LawResult pc{.law = "partial_map_continuity"};
    pc.checked = 1;
    if (auto w = partial_continuity_witness(f)) {
      pc.pass = false;
      pc.witness = Json{{"A", subset_json(*w)}};
    }
    o.report.add(pc);
    const LaxResult lax = is_lax_morphism(f);
    LawResult lx{.law = "lax_preimage"};
    lx.checked = 1;
    if (!lax.lax) {
      lx.pass = false;
      lx.witness = Json{{"A", subset_json(*lax.witness)}};
    }
    o.report.add(lx);
    o.result["preimage_commutes_with_closure"] = lax.equality;
  }
  return o;
}

Outcome loops_check(const Config& c) {
  const Json j = load_file(c.file);
  Outcome o;
  if (io::is_raw_loop(j)) {
    o.report = lc_check_raw(io::read_raw_loop(j, dir_of(c.file)), c.cap);
  } else {
    const LoopExpr e = io::read_loop_expr(j, dir_of(c.file));
    o.report = lc_check(e, c.cap);
    o.result = Json{{"length", e.length()}, {"depth", e.depth()}};
  }
  return o;
}

Outcome loops_aux(const Config& c) {
  const LoopExpr e = io::read_loop_expr(load_file(c.file), dir_of(c.file));
  const Loop loop = realize(e);
  const AuxSequence aux = auxiliary_sequence(e);
  Outcome o;
  o.report = validate_aux(loop, aux);
  o.report.add(replay_aux_all(loop, aux, c.cap));
  o.report.append(lc_check(e, c.cap));
  Json maps = Json::array();
  for (const auto& g : aux.maps) maps.push_back(g.values());
  o.result = Json{{"aux", maps}};
  return o;
}

Outcome loops_search(const Config& c) {
  Rng rng(c.seed);
  Outcome o;
  LawResult law{.law = "loop_contraction"};
  law.exhaustive = false;
  for (std::size_t t = 0; t < c.count && law.pass; ++t) {
    ++law.checked;
    if (c.raw) {
      const Loop loop = random_raw_loop(rng, c.length, c.max_points);
      const Report r = lc_check_raw(loop, c.cap);
      if (!r.pass()) {
        law.pass = false;
        law.witness = r.laws().front().witness;
        law.witness["loop"] = io::loop_to_json(loop);
        law.witness["attempt"] = t;
      }
    } else {
      LoopGenOptions opt;
      opt.max_points = c.max_points;
      if (c.depth) opt.max_depth = *c.depth;
      const LoopExpr e = random_loop_expr(rng, opt);
      const Report r = lc_check(e, c.cap);
      if (!r.pass()) {
        law.pass = false;
        law.witness = r.laws().front().witness;
        law.witness["loop"] = io::loop_to_json(realize(e));
        law.witness["attempt"] = t;
      }
    }
  }
  o.report.add(law);
  return o;
}

Outcome relseq_validate(const Config& c) {
  const RelSeq s = io::read_sequence(load_file(c.file), dir_of(c.file));
  Outcome o;
  o.report = validate(s);
  if (o.report.pass()) o.report.append(check_basis(s));
  o.result = Json{{"stabilization", stabilization(s)}};
  return o;
}

Outcome relseq_colimit(const Config& c) {
  const RelSeq s = io::read_sequence(load_file(c.file), dir_of(c.file));
  Outcome o;
  const Colimit col = colimit(s);
  o.result = io::colimit_to_json(col);
  o.result["stabilization"] = stabilization(s);
  o.human = io::space_to_json(col.space).dump() + "\n";
  return o;
}

Outcome relseq_preserve(const Config& c) {
  if (c.seqs.size() != 2) throw Error(ErrorKind::InvalidInput, "relseq preserve takes exactly two --seq options");
  const RelSeq s = io::read_sequence(load_file(c.seqs[0]), dir_of(c.seqs[0]));
  const RelSeq t = io::read_sequence(load_file(c.seqs[1]), dir_of(c.seqs[1]));
  Outcome o;
  o.report.append(check_product_preservation(s, t), "product.");
  if (!c.morphism.empty()) {
    const SeqMorphism f = io::read_morphism(load_file(c.morphism), dir_of(c.morphism));
    if (c.morphism_g.empty()) {
      o.report.append(validate_morphism(s, t, f), "morphism.");
      if (is_embedding_morphism(s, t, f)) o.report.append(check_embedding_preservation(s, t, f), "embedding.");
      o.result["embedding"] = is_embedding_morphism(s, t, f);
    } else {
      const SeqMorphism g = io::read_morphism(load_file(c.morphism_g), dir_of(c.morphism_g));
      o.report.append(check_equalizer_preservation(s, t, f, g), "equalizer.");
    }
  }
  return o;
}

Outcome relseq_from_poset(const Config& c) {
  const Json j = load_file(c.file);
  std::vector<std::string> points = j.at("points").get<std::vector<std::string>>();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& p : j.value("order", Json::array())) pairs.emplace_back(p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>());
  const Preorder order = Preorder::from_pairs(points.size(), pairs);
  const RelSeq s = from_poset(points, order, c.depth.value_or(3));
  const Colimit col = colimit(s);
  Outcome o;
  LawResult agree{.law = "alexandroff_agreement"};
  agree.checked = 1;
  if (!col.space.same_topology(alexandroff_from_preorder(points, order))) {
    agree.pass = false;
    agree.witness = Json{{"colimit", io::space_to_json(col.space)}};
  }
  o.report.add(agree);
  o.result = Json{{"sequence", io::sequence_to_json(s)}, {"colimit", io::colimit_to_json(col)}};
  return o;
}

Outcome relseq_from_metric(const Config& c) {
  const Json j = load_file(c.file);
  std::vector<std::string> points = j.at("points").get<std::vector<std::string>>();
  std::vector<std::vector<Rational>> d;
  for (const auto& row : j.at("distance")) {
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(Rational::parse(v.is_string() ? v.get<std::string>() : v.dump()));
    d.push_back(std::move(r));
  }
  const RelSeq s = from_metric(points, d, c.depth.value_or(3));
  Outcome o;
  o.report = validate(s);
  o.result = Json{{"sequence", io::sequence_to_json(s)}, {"colimit", io::colimit_to_json(colimit(s))}};
  return o;
}

Outcome complete_close(const Config& c) {
  const Bundle b = load_bundle(c);
  const Closure cl = close_relations(b, c.trace);
  Outcome o;
  o.report = validate_family(b, cl.family);
  o.result = Json{{"depth", b.depth()}, {"relations", io::family_to_json(b, cl.family)}};
  if (c.trace) o.result["trace"] = io::trace_to_json(b, cl.trace);
  return o;
}

Outcome complete_l5(const Config& c) {
  const Bundle b = load_bundle(c);
  const Closure cl = close_relations(b, c.trace);
  Outcome o;
  o.report = verify_l5(b, cl.family);
  if (c.trace) o.result["trace"] = io::trace_to_json(b, cl.trace);
  return o;
}

Outcome complete_assemble(const Config& c) {
  const Bundle b = load_bundle(c);
  const Closure cl = close_relations(b, c.trace);
  Outcome o;
  o.report = validate_family(b, cl.family);
  o.report.append(verify_l5(b, cl.family));
  const Assembly a = assemble_top_model(b, cl.family);
  o.report.append(a.report);
  Json spaces = Json::object();
  for (std::size_t x = 0; x < b.site.object_count(); ++x) spaces[b.site.object_name(x)] = io::space_to_json(a.colimits[x].space);
  o.result = Json{{"depth", b.depth()}, {"spaces", spaces}, {"diagnostics", a.diagnostics}};
  if (c.trace) o.result["trace"] = io::trace_to_json(b, cl.trace);
  return o;
}

Outcome synt_check(const Config& c) {
  const SyntUniverse u = io::read_universe(load_file(c.file), dir_of(c.file));
  Outcome o;
  o.report = check_synt_axioms(u);
  o.result = Json{{"objects", u.objects.size()}, {"maps", u.maps.size()}};
  return o;
}

Outcome logic_parse(const Config& c) {
  const Formula f = parse_formula(c.text);
  Outcome o;
  o.result = Json{{"formula", print_formula(f)}};
  o.human = print_formula(f) + "\n";
  if (!c.file.empty()) {
    const Interpretation m = io::read_model(load_file(c.file), dir_of(c.file));
    const Context ctx = infer_context(m.signature(), f);
    o.result["context"] = context_json(ctx);
  }
  return o;
}

Json tuples_json(const Interpretation& m, const Context& ctx, const PointSet& s) {
  Json out = Json::array();
  s.for_each([&](std::size_t p) {
    Json t = Json::array();
    for (const auto& [v, name] : decode_point(m, ctx, p)) t.push_back(name);
    out.push_back(t);
  });
  return out;
}

Outcome logic_eval(const Config& c) {
  const Interpretation m = io::read_model(load_file(c.file), dir_of(c.file));
  const Formula f = parse_formula(c.text);
  const Context ctx = c.context.empty() ? infer_context(m.signature(), f) : parse_context(c.context);
  const PointSet s = eval(m, f, ctx);
  Outcome o;
  o.result = Json{{"formula", print_formula(f)}, {"context", context_json(ctx)}, {"indices", subset_json(s)},
                  {"tuples", tuples_json(m, ctx, s)}};
  o.human = print_formula(f) + "\n" + o.result["tuples"].dump() + "\n";
  return o;
}

Outcome logic_check(const Config& c) {
  const Interpretation m = io::read_model(load_file(c.file), dir_of(c.file));
  const auto [a, b] = parse_sequent(c.text);
  const Context ctx = c.context.empty() ? infer_context(m.signature(), std::vector<Formula>{a, b}) : parse_context(c.context);
  const SequentResult r = check_sequent(m, a, b, ctx);
  Outcome o;
  LawResult law{.law = "sequent"};
  law.checked = m.context_space(ctx).size();
  if (!r.holds) {
    law.pass = false;
    Json w = Json::object();
    for (const auto& [v, name] : *r.counterexample) w[v] = name;
    law.witness = Json{{"point", w}};
  }
  o.report.add(law);
  o.result = Json{{"sequent", print_formula(a) + " |- " + print_formula(b)}, {"context", context_json(ctx)}};
  return o;
}

int emit(const std::string& command, const Outcome& o, const Config& c) {
  const bool pass = o.report.pass();
  if (c.format == "json") {
    Json out{{"command", command}, {"status", pass ? "pass" : "fail"}, {"report", o.report.to_json()}, {"result", o.result}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << o.human;
    if (!o.report.laws().empty()) std::cout << o.report.to_human();
  }
  return pass ? 0 : 1;
}

int emit_error(const std::string& command, const std::exception& e, const Config& c) {
  if (c.format == "json") {
    Json err{{"message", e.what()}};
    if (const auto* te = dynamic_cast<const Error*>(&e)) err["kind"] = std::string(to_string(te->kind()));
    if (const auto* hv = dynamic_cast<const HypothesisViolated*>(&e)) {
      const auto& w = hv->witness();
      err["witness"] = Json{{"symbol", w.symbol_name}, {"stage", w.stage}, {"element", w.element_name}};
    }
    std::cout << Json{{"command", command}, {"status", "error"}, {"error", err}}.dump(2) << "\n";
  }
  std::cerr << "error: " << e.what() << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Finite topological modal logic workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "Seed for randomized checks and generators");
  app.add_option("--depth", cfg.depth, "Truncation depth or generator depth");
  app.add_option("--cap", cfg.cap, "Largest number of subsets visited by one check")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"human", "json"}));

  std::vector<std::pair<CLI::App*, std::function<Outcome(const Config&)>>> leaves;
  auto group = [&](const char* name, const char* help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };
  auto leaf = [&](CLI::App* g, const char* name, const char* help, std::function<Outcome(const Config&)> run) {
    CLI::App* s = g->add_subcommand(name, help);
    leaves.emplace_back(s, std::move(run));
    return s;
  };

  CLI::App* space = group("space", "Finite spaces");
  leaf(space, "check", "Validate a space and its closure laws", space_check)
      ->add_option("--space", cfg.spaces, "Space file or builtin")->required();
  {
    CLI::App* s = leaf(space, "closure", "Closure and interior of a subset", space_closure);
    s->add_option("--space", cfg.spaces, "Space file or builtin")->required();
    s->add_option("--set", cfg.text, "Subset as a JSON array")->required();
  }
  {
    CLI::App* s = leaf(space, "enumerate", "Enumerate the topologies on n points", space_enumerate);
    s->add_option("n", cfg.n, "Number of points")->required();
    s->add_flag("--count-only", cfg.count_only, "Print only the count");
    s->add_option("--strategy", cfg.strategy, "families or preorders");
  }
  leaf(space, "hausdorff", "Hausdorff test", space_hausdorff)
      ->add_option("--space", cfg.spaces, "Space file or builtin")->required();

  CLI::App* modal = group("modal", "Closure algebras");
  leaf(modal, "s4", "S4 laws of the closure operator", modal_s4)->add_option("--space", cfg.spaces, "Space file or builtin")->required();
  leaf(modal, "pi", "Closure of rectangles", modal_pi)->add_option("--space", cfg.spaces, "Space file or builtin")->required();

  CLI::App* rel = group("rel", "Relations and partial maps");
  leaf(rel, "check", "Continuity of a relation", rel_check)->add_option("--relation", cfg.file, "Relation file")->required();

  CLI::App* loops = group("loops", "Loops and the contraction law");
  leaf(loops, "check", "Contraction law for a certificate or raw loop", loops_check)
      ->add_option("--loop", cfg.file, "Loop file (certificate or raw)")->required();
  leaf(loops, "aux", "Auxiliary sequence of a total-map certificate", loops_aux)->add_option("--loop", cfg.file, "Loop file (certificate or raw)")->required();
  {
    CLI::App* s = leaf(loops, "search-counterexample", "Random search for contraction failures", loops_search);
    s->add_flag("--raw", cfg.raw, "Search raw relation loops instead of certificates");
    s->add_option("--count", cfg.count, "Number of random loops");
    s->add_option("--length", cfg.length, "Length of raw loops");
    s->add_option("--max-points", cfg.max_points, "Largest space size");
  }

  CLI::App* relseq = group("relseq", "Relational sequences");
  leaf(relseq, "validate", "Sequence laws and basis properties", relseq_validate)->add_option("--seq", cfg.file, "Sequence file")->required();
  leaf(relseq, "colimit", "Colimit space of a sequence", relseq_colimit)->add_option("--seq", cfg.file, "Sequence file")->required();
  {
    CLI::App* s = leaf(relseq, "preserve", "Product, embedding and equalizer preservation", relseq_preserve);
    s->add_option("--seq", cfg.seqs, "Two sequence files")->required();
    s->add_option("--morphism", cfg.morphism, "Morphism file from the first to the second sequence");
    s->add_option("--morphism-g", cfg.morphism_g, "Second parallel morphism, for equalizers");
  }
  leaf(relseq, "from-poset", "Constant sequence of a preorder", relseq_from_poset)->add_option("--poset", cfg.file, "Preorder file")->required();
  leaf(relseq, "from-metric", "Sequence of a finite metric", relseq_from_metric)->add_option("--metric", cfg.file, "Distance matrix file")->required();

  CLI::App* complete = group("complete", "Relation closure and model assembly");
  for (auto [name, help, fn] : {std::tuple{"close-relations", "Close base relations under the rules", &complete_close},
                                std::tuple{"verify-l5", "Check the modal rule on the closed family", &complete_l5},
                                std::tuple{"assemble", "Assemble colimit spaces and diagnostics", &complete_assemble}}) {
    CLI::App* s = leaf(complete, name, help, fn);
    s->add_option("--bundle", cfg.file, "Bundle file")->required();
    s->add_flag("--trace", cfg.trace, "Record the rule that added each pair");
  }

  CLI::App* synt = group("synt", "Syntactic category over finite spaces");
  leaf(synt, "check", "Check the category axioms on a universe", synt_check)->add_option("--universe", cfg.file, "Universe file")->required();

  CLI::App* logic = group("logic", "First-order modal formulas");
  {
    CLI::App* s = leaf(logic, "parse", "Parse and print a formula", logic_parse);
    s->add_option("formula", cfg.text, "Formula text")->required();
    s->add_option("--model", cfg.file, "Model used to infer the context");
  }
  {
    CLI::App* s = leaf(logic, "eval", "Evaluate a formula in a model", logic_eval);
    s->add_option("--model", cfg.file, "Model file")->required();
    s->add_option("--formula", cfg.text, "Formula text")->required();
    s->add_option("--context", cfg.context, "x:S,y:T (default: inferred)");
  }
  {
    CLI::App* s = leaf(logic, "check", "Check a sequent in a model", logic_check);
    s->add_option("--model", cfg.file, "Model file")->required();
    s->add_option("--sequent", cfg.text, "antecedent |- consequent")->required();
    s->add_option("--context", cfg.context, "x:S,y:T (default: inferred)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (const auto& [sub, run] : leaves) {
    if (!sub->parsed()) continue;
    const std::string command = sub->get_parent()->get_name() + " " + sub->get_name();
    try {
      return emit(command, run(cfg), cfg);
    } catch (const std::exception& e) {
      return emit_error(command, e, cfg);
    }
  }
  std::cerr << app.help();
  return 2;
}
