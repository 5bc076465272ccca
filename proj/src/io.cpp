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


#include "topocat/io.hpp"

#include <fstream>
#include <sstream>

#include "topocat/error.hpp"

namespace topocat::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t as_index(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) bad(what + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::size_t point_of(const Json& j, const std::vector<std::string>& names, const std::string& what) {
  if (j.is_string()) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == j.get<std::string>()) return i;
    }
    bad(what + ": unknown point '" + j.get<std::string>() + "'");
  }
  const std::size_t i = as_index(j, what);
  if (i >= names.size()) bad(what + ": index " + std::to_string(i) + " out of range");
  return i;
}

std::optional<FiniteSpace> builtin(const std::string& s) {
  auto sized = [&](const std::string& prefix) -> std::optional<std::size_t> {
    if (s.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string digits = s.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    return std::stoul(digits);
  };
  if (s == "point") return point_space();
  if (s == "sierpinski") return sierpinski_space();
  if (auto n = sized("discrete:")) return discrete_space(*n);
  if (auto n = sized("indiscrete:")) return indiscrete_space(*n);
  if (auto n = sized("chain:")) return chain_space(*n);
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> read_pairs(const Json& j, const std::vector<std::string>& src,
                                                            const std::vector<std::string>& dst) {
  if (!j.is_array()) bad("pairs must be an array");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) bad("each pair must have two entries");
    out.emplace_back(point_of(p[0], src, "pair source"), point_of(p[1], dst, "pair target"));
  }
  return out;
}

Json pairs_json(const BinaryRelation& r) {
  Json out = Json::array();
  for (auto [x, y] : r.pairs()) out.push_back(Json::array({x, y}));
  return out;
}

std::vector<std::optional<std::size_t>> read_values(const Json& j, const FiniteSpace& source,
                                                    const FiniteSpace& target) {
  if (!j.is_array() || j.size() != source.size()) bad("values must list one entry per source point");
  std::vector<std::optional<std::size_t>> out;
  for (const auto& v : j) {
    if (v.is_null()) out.emplace_back();
    else out.emplace_back(point_of(v, target.points(), "map value"));
  }
  return out;
}

PointSet subset_of(const Json& j, const std::vector<std::string>& names) {
  if (!j.is_array()) bad("a subset must be an array");
  PointSet s(names.size());
  for (const auto& p : j) s.set(point_of(p, names, "subset"));
  return s;
}

}  // namespace

Json read_json_file(const Path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

std::pair<Json, Path> resolve(const Json& ref, const Path& base) {
  if (ref.is_string()) {
    const Path p = base / ref.get<std::string>();
    return {read_json_file(p), p.parent_path()};
  }
  return {ref, base};
}

// ---------------------------------------------------------------- spaces

FiniteSpace read_space(const Json& ref, const Path& base) {
  if (ref.is_string()) {
    if (auto b = builtin(ref.get<std::string>())) return *b;
  }
  const auto [j, dir] = resolve(ref, base);
  if (j.is_string()) return read_space(j, dir);
  std::vector<std::string> points;
  for (const auto& p : field(j, "points")) {
    if (p.is_string()) points.push_back(p.get<std::string>());
    else if (p.is_number_integer()) points.push_back(std::to_string(p.get<std::int64_t>()));
    else bad("point names must be strings");
  }
  std::vector<PointSet> opens;
  for (const auto& o : field(j, "opens")) opens.push_back(subset_of(o, points));
  return FiniteSpace::from_opens(std::move(points), opens);
}

Json space_to_json(const FiniteSpace& x) {
  Json opens = Json::array();
  for (const auto& o : x.opens()) opens.push_back(subset_json(o));
  return Json{{"points", x.points()}, {"opens", opens}};
}

PointSet read_subset(const Json& j, const FiniteSpace& x) { return subset_of(j, x.points()); }

// ---------------------------------------------------------------- relations

Relation read_relation(const Json& ref, const Path& base) {
  const auto [j, dir] = resolve(ref, base);
  const FiniteSpace src = read_space(field(j, "source"), dir);
  const FiniteSpace dst = read_space(field(j, "target"), dir);
  Relation r = Relation::from_pairs(src, dst, read_pairs(field(j, "pairs"), src.points(), dst.points()));
  if (j.value("functional", false) && !r.is_functional()) (void)PartialMap::from_relation(r);
  return r;
}

Json relation_to_json(const Relation& r) {
  return Json{{"source", space_to_json(r.source())},
              {"target", space_to_json(r.target())},
              {"pairs", pairs_json(r.rel())},
              {"functional", r.is_functional()}};
}

PartialMap read_partial_map(const Json& ref, const Path& base) {
  const auto [j, dir] = resolve(ref, base);
  if (j.contains("values")) {
    const FiniteSpace src = read_space(field(j, "source"), dir);
    const FiniteSpace dst = read_space(field(j, "target"), dir);
    return PartialMap(src, dst, read_values(j.at("values"), src, dst));
  }
  return PartialMap::from_relation(read_relation(j, dir));
}

PartialMap read_partial_map(const Json& ref, const Path& base, const FiniteSpace& source, const FiniteSpace& target) {
  const auto [j, dir] = resolve(ref, base);
  if (j.is_array()) return PartialMap(source, target, read_values(j, source, target));
  if (j.contains("values") && !j.contains("source")) {
    return PartialMap(source, target, read_values(j.at("values"), source, target));
  }
  const PartialMap pm = read_partial_map(j, dir);
  if (!pm.source().same_topology(source) || !pm.target().same_topology(target)) {
    throw Error(ErrorKind::SpaceMismatch, "map does not live between the declared spaces");
  }
  return PartialMap(source, target, pm.values());
}

// ---------------------------------------------------------------- loops

bool is_raw_loop(const Json& j) { return j.is_object() && j.value("op", "") == "raw"; }

LoopExpr read_loop_expr(const Json& ref, const Path& base) {
  const auto [j, dir] = resolve(ref, base);
  const std::string op = field(j, "op").get<std::string>();
  if (op == "empty") return LoopExpr::empty(read_space(field(j, "anchor"), dir));
  if (op == "insert_id") {
    return LoopExpr::insert_id(read_loop_expr(field(j, "inner"), dir), as_index(field(j, "position"), "position"));
  }
  if (op == "concat") return LoopExpr::concat(read_loop_expr(field(j, "left"), dir), read_loop_expr(field(j, "right"), dir));
  if (op == "product") return LoopExpr::product(read_loop_expr(field(j, "left"), dir), read_loop_expr(field(j, "right"), dir));
  if (op == "conjugate") {
    return LoopExpr::conjugate(read_partial_map(field(j, "map"), dir), read_loop_expr(field(j, "inner"), dir));
  }
  bad("unknown loop constructor '" + op + "'");
}

Loop read_raw_loop(const Json& ref, const Path& base) {
  const auto [j, dir] = resolve(ref, base);
  Loop loop;
  loop.anchor = read_space(field(j, "anchor"), dir);
  for (const auto& r : field(j, "rels")) loop.rels.push_back(read_relation(r, dir));
  (void)loop.stages();
  return loop;
}

Json loop_to_json(const Loop& loop) {
  Json rels = Json::array();
  for (const auto& r : loop.rels) rels.push_back(relation_to_json(r));
  return Json{{"op", "raw"}, {"anchor", space_to_json(loop.anchor)}, {"rels", rels}};
}

// ---------------------------------------------------------------- sequences

RelSeq read_sequence(const Json& ref, const Path& base) {
  const auto [j, dir] = resolve(ref, base);
  std::vector<std::vector<std::string>> stages;
  for (const auto& st : field(j, "stages")) {
    std::vector<std::string> names;
    for (const auto& n : st) names.push_back(n.is_string() ? n.get<std::string>() : n.dump());
    stages.push_back(std::move(names));
  }
  std::vector<std::vector<std::size_t>> steps;
  const Json steps_json = j.value("steps", Json::array());
  for (std::size_t i = 0; i < steps_json.size(); ++i) {
    std::vector<std::size_t> step;
    for (const auto& v : steps_json[i]) {
      if (i + 1 >= stages.size()) bad("more steps than stage transitions");
      step.push_back(point_of(v, stages[i + 1], "step value"));
    }
    steps.push_back(std::move(step));
  }
  RelSeq s(stages, steps);
  for (std::size_t i = 0; i < s.depth(); ++i) s.set_rel(i, i, BinaryRelation::identity(stages[i].size()));
  if (j.contains("rels")) {
    for (const auto& [key, pairs] : j.at("rels").items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) bad("relation key '" + key + "' must look like \"i,j\"");
      std::size_t i = 0;
      std::size_t k = 0;
      try {
        i = std::stoul(key.substr(0, comma));
        k = std::stoul(key.substr(comma + 1));
      } catch (const std::exception&) {
        bad("relation key '" + key + "' must look like \"i,j\"");
      }
      if (i > k || k >= stages.size()) bad("relation key '" + key + "' out of range");
      s.set_rel(i, k, BinaryRelation::from_pairs(stages[i].size(), stages[k].size(),
                                                 read_pairs(pairs, stages[i], stages[k])));
    }
  }
  return s;
}

Json sequence_to_json(const RelSeq& s) {
  Json rels = Json::object();
  for (std::size_t i = 0; i < s.depth(); ++i) {
    for (std::size_t j = i; j < s.depth(); ++j) rels[std::to_string(i) + "," + std::to_string(j)] = pairs_json(s.rel(i, j));
  }
  return Json{{"stages", s.stages()}, {"steps", s.steps()}, {"rels", rels}};
}

Json colimit_to_json(const Colimit& c) {
  Json basic = Json::array();
  for (const auto& stage : c.basic) {
    Json row = Json::array();
    for (const auto& b : stage) row.push_back(subset_json(b));
    basic.push_back(row);
  }
  return Json{{"space", space_to_json(c.space)}, {"class_maps", c.class_maps}, {"basic", basic}};
}

SeqMorphism read_morphism(const Json& ref, const Path& base) {
  const auto [j, dir] = resolve(ref, base);
  SeqMorphism m;
  for (const auto& stage : field(j, "maps")) {
    std::vector<std::size_t> f;
    for (const auto& v : stage) f.push_back(as_index(v, "morphism value"));
    m.maps.push_back(std::move(f));
  }
  return m;
}

// ---------------------------------------------------------------- bundles

Bundle read_bundle(const Json& ref, const Path& base) {
  const auto [j, dir] = resolve(ref, base);
  Bundle b;
  Site& site = b.site;
  auto object = [&](const Json& name) {
    auto o = site.find_object(name.get<std::string>());
    if (!o) bad("unknown object '" + name.get<std::string>() + "'");
    return *o;
  };
  for (const auto& o : field(j, "objects")) site.add_object(field(o, "name").get<std::string>(), read_space(field(o, "space"), dir));
  for (const auto& p : j.value("products", Json::array())) {
    site.add_product(field(p, "name").get<std::string>(), object(field(p, "left")), object(field(p, "right")));
  }
  for (const auto& m : j.value("maps", Json::array())) {
    const std::size_t from = object(field(m, "from"));
    const std::size_t to = object(field(m, "to"));
    site.add_map(field(m, "name").get<std::string>(), from, to,
                 read_partial_map(field(m, "map"), dir, site.object_space(from), site.object_space(to)));
  }
  const Json symbols = j.value("symbols", Json::array());
  auto symbol_index = [&](const Json& name) -> std::size_t {
    for (std::size_t k = 0; k < symbols.size(); ++k) {
      if (field(symbols[k], "name") == name) return k;
    }
    bad("unknown symbol " + name.dump());
  };
  for (const auto& s : symbols) {
    Symbol sym;
    sym.name = field(s, "name").get<std::string>();
    sym.object = object(field(s, "object"));
    if (s.contains("diamond")) sym.diamond = symbol_index(s.at("diamond"));
    const std::string op = s.value("op", "atom");
    if (op == "atom") sym.op = Symbol::Op::Atom;
    else if (op == "and") sym.op = Symbol::Op::And;
    else if (op == "or") sym.op = Symbol::Op::Or;
    else if (op == "not") sym.op = Symbol::Op::Not;
    else bad("unknown symbol operation '" + op + "'");
    for (const auto& o : s.value("operands", Json::array())) sym.operands.push_back(symbol_index(o));
    const std::size_t need = sym.op == Symbol::Op::Atom ? 0 : sym.op == Symbol::Op::Not ? 1 : 2;
    if (sym.operands.size() != need) bad("symbol '" + sym.name + "' has the wrong number of operands");
    site.add_symbol(std::move(sym));
  }

  const Json stages = field(j, "stages");
  for (const auto& st : stages) {
    ModelStage m;
    m.elements.resize(site.object_count());
    m.maps.resize(site.maps().size());
    const Json elements = st.value("elements", Json::object());
    for (std::size_t x = 0; x < site.object_count(); ++x) {
      if (site.product_of(x)) continue;
      const std::string& name = site.object_name(x);
      if (elements.contains(name)) {
        for (const auto& e : elements.at(name)) m.elements[x].push_back(e.is_string() ? e.get<std::string>() : e.dump());
      } else {
        m.elements[x] = site.object_space(x).points();
      }
    }
    const Json maps = st.value("maps", Json::object());
    for (std::size_t k = 0; k < site.maps().size(); ++k) {
      const SiteMap& f = site.maps()[k];
      if (site.product_of(f.from) && (f.name == site.object_name(f.from) + ".left" ||
                                      f.name == site.object_name(f.from) + ".right")) {
        continue;
      }
      if (maps.contains(f.name)) {
        for (const auto& v : maps.at(f.name)) {
          m.maps[k].push_back(v.is_null() ? std::nullopt
                                          : std::optional<std::size_t>(point_of(v, m.elements[f.to], "map action")));
        }
      } else {
        m.maps[k] = f.map.values();
      }
    }
    b.stages.push_back(std::move(m));
  }
  complete_products(b);
  for (std::size_t i = 0; i < b.stages.size(); ++i) {
    const Json syms = stages[i].value("symbols", Json::object());
    auto& m = b.stages[i];
    for (const auto& sym : site.symbols()) {
      if (!syms.contains(sym.name)) bad("stage " + std::to_string(i) + " does not interpret symbol '" + sym.name + "'");
      PointSet s(m.elements[sym.object].size());
      for (const auto& e : syms.at(sym.name)) s.set(point_of(e, m.elements[sym.object], "symbol member"));
      m.symbols.push_back(std::move(s));
    }
  }
  const Json steps = j.value("steps", Json::array());
  const Json base_rels = j.value("base", Json::array());
  for (std::size_t i = 0; i + 1 < b.stages.size(); ++i) {
    for (std::size_t x = 0; x < site.object_count(); ++x) {
      if (site.product_of(x)) continue;
      const std::string& name = site.object_name(x);
      const auto& here = b.stages[i].elements[x];
      const auto& next = b.stages[i + 1].elements[x];
      std::vector<std::size_t> step;
      if (i < steps.size() && steps[i].contains(name)) {
        for (const auto& v : steps[i].at(name)) step.push_back(point_of(v, next, "step value"));
      } else {
        if (here.size() != next.size()) bad("step of '" + name + "' at stage " + std::to_string(i) + " is required");
        for (std::size_t p = 0; p < here.size(); ++p) step.push_back(p);
      }
      b.steps[i][x] = std::move(step);
    }
    for (std::size_t x = 0; x < site.object_count(); ++x) {
      const std::string& name = site.object_name(x);
      const auto& here = b.stages[i].elements[x];
      const auto& next = b.stages[i + 1].elements[x];
      if (i < base_rels.size() && base_rels[i].contains(name)) {
        b.base[i][x] = BinaryRelation::from_pairs(here.size(), next.size(), read_pairs(base_rels[i].at(name), here, next));
      } else if (b.base[i][x].source_size() != here.size() || b.base[i][x].target_size() != next.size()) {
        b.base[i][x] = BinaryRelation(here.size(), next.size());
      }
    }
  }
  complete_products(b);
  validate_bundle(b);
  return b;
}

Json family_to_json(const Bundle& b, const RelFamily& family) {
  Json out = Json::object();
  for (std::size_t x = 0; x < b.site.object_count(); ++x) {
    Json rels = Json::object();
    for (std::size_t i = 0; i < family.depth(); ++i) {
      for (std::size_t k = i + 1; k < family.depth(); ++k) {
        rels[std::to_string(i) + "," + std::to_string(k)] = pairs_json(family.at(x, i, k));
      }
    }
    out[b.site.object_name(x)] = rels;
  }
  return out;
}

Json trace_to_json(const Bundle& b, const std::vector<TraceEntry>& trace) {
  Json out = Json::array();
  for (const auto& t : trace) {
    out.push_back(Json{{"object", b.site.object_name(t.object)},
                       {"i", t.i},
                       {"j", t.j},
                       {"pair", {b.stages[t.i].elements[t.object][t.x], b.stages[t.j].elements[t.object][t.y]}},
                       {"rule", t.rule},
                       {"detail", t.detail}});
  }
  return out;
}

// ---------------------------------------------------------------- universes

SyntUniverse read_universe(const Json& ref, const Path& base) {
  const auto [j, dir] = resolve(ref, base);
  if (j.contains("exhaustive")) {
    std::vector<FiniteSpace> spaces;
    for (const auto& s : j.at("exhaustive")) spaces.push_back(read_space(s, dir));
    return exhaustive_universe(spaces);
  }
  SyntUniverse u;
  std::vector<std::string> names;
  for (const auto& o : field(j, "objects")) {
    FiniteSpace sp = read_space(field(o, "space"), dir);
    PointSet pred = o.contains("pred") ? read_subset(o.at("pred"), sp) : sp.full_set();
    names.push_back(field(o, "name").get<std::string>());
    u.objects.push_back(SyntObj::make(std::move(sp), std::move(pred)));
  }
  auto object = [&](const Json& n) -> const SyntObj& {
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (names[k] == n.get<std::string>()) return u.objects[k];
    }
    bad("unknown object " + n.dump());
  };
  for (const auto& m : j.value("maps", Json::array())) {
    const SyntObj& from = object(field(m, "from"));
    const SyntObj& to = object(field(m, "to"));
    u.maps.push_back(SyntMap::make(from, to, read_partial_map(field(m, "map"), dir, from.space, to.space)));
  }
  return u;
}

// ---------------------------------------------------------------- models

Interpretation read_model(const Json& ref, const Path& base) {
  const auto [j, dir] = resolve(ref, base);
  Signature sig;
  const Json sorts = field(j, "sorts");
  const Json functions = j.value("functions", Json::object());
  const Json predicates = j.value("predicates", Json::object());
  for (const auto& [name, _] : sorts.items()) sig.add_sort(name);
  auto strings = [](const Json& a) {
    std::vector<std::string> out;
    for (const auto& s : a) out.push_back(s.get<std::string>());
    return out;
  };
  for (const auto& [name, f] : functions.items()) {
    sig.add_function(FunctionSymbol{name, strings(f.value("args", Json::array())), field(f, "result").get<std::string>(),
                                    function_kind_from_string(f.value("kind", "total"))});
  }
  for (const auto& [name, p] : predicates.items()) {
    sig.add_predicate(PredicateSymbol{name, strings(p.value("args", Json::array()))});
  }
  Interpretation m(sig);
  for (const auto& [name, s] : sorts.items()) m.set_sort(name, read_space(s, dir));
  auto tuple_index = [&](const Json& t, const std::vector<std::string>& args, std::size_t count) {
    const Json tup = t.is_array() ? t : Json::array({t});
    if (tup.size() != count) bad("tuple " + tup.dump() + " has the wrong length");
    std::size_t idx = 0;
    for (std::size_t k = 0; k < args.size(); ++k) {
      const FiniteSpace& s = m.sort(args[k]);
      idx = idx * s.size() + point_of(tup[k], s.points(), "tuple entry");
    }
    return idx;
  };
  for (const auto& [name, f] : functions.items()) {
    const FunctionSymbol sym = *m.signature().function(name);
    const FiniteSpace src = m.arg_space(sym.args);
    const FiniteSpace& dst = m.sort(sym.result);
    std::vector<std::optional<std::size_t>> values(src.size());
    for (const auto& entry : field(f, "map")) {
      if (!entry.is_array() || entry.size() != sym.args.size() + 1) bad("map entry " + entry.dump() + " of '" + name + "'");
      Json args = Json::array();
      for (std::size_t k = 0; k < sym.args.size(); ++k) args.push_back(entry[k]);
      const std::size_t idx = sym.args.empty() ? 0 : tuple_index(args, sym.args, sym.args.size());
      const std::size_t v = point_of(entry.back(), dst.points(), "function value");
      if (values[idx] && *values[idx] != v) throw Error(ErrorKind::NotFunctional, "'" + name + "' has two values at " + args.dump());
      values[idx] = v;
    }
    m.set_function(name, PartialMap(src, dst, std::move(values)));
  }
  for (const auto& [name, p] : predicates.items()) {
    const PredicateSymbol sym = *m.signature().predicate(name);
    PointSet members(m.arg_space(sym.args).size());
    for (const auto& t : field(p, "members")) members.set(sym.args.empty() ? 0 : tuple_index(t, sym.args, sym.args.size()));
    m.set_predicate(name, std::move(members));
  }
  m.validate();
  return m;
}

}  // namespace topocat::io
