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


#include "topocat/complete.hpp"

#include <algorithm>

#include "topocat/loops.hpp"

namespace topocat {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidModel, what); }

BinaryRelation pairing(const BinaryRelation& r, const BinaryRelation& s) {
  const std::size_t sy = s.source_size();
  const std::size_t ty = s.target_size();
  BinaryRelation out(r.source_size() * sy, r.target_size() * ty);
  for (auto [x, x2] : r.pairs()) {
    for (auto [y, y2] : s.pairs()) out.insert(pair_index(x, y, sy), pair_index(x2, y2, ty));
  }
  return out;
}

}  // namespace

std::size_t Site::add_object(const std::string& name, FiniteSpace space) {
  if (find_object(name)) invalid("duplicate object '" + name + "'");
  objects_.emplace_back(name, std::move(space));
  return objects_.size() - 1;
}

std::size_t Site::add_map(const std::string& name, std::size_t from, std::size_t to, PartialMap map) {
  if (find_map(name)) invalid("duplicate map '" + name + "'");
  if (from >= objects_.size() || to >= objects_.size()) invalid("map '" + name + "' uses an unknown object");
  if (!(map.source() == objects_[from].second) || !(map.target() == objects_[to].second)) {
    invalid("map '" + name + "' does not live between its declared objects");
  }
  if (!is_continuous_partial(map)) invalid("map '" + name + "' is not continuous on its domain");
  maps_.push_back(SiteMap{name, from, to, std::move(map)});
  return maps_.size() - 1;
}

std::size_t Site::add_product(const std::string& name, std::size_t left, std::size_t right) {
  if (left >= objects_.size() || right >= objects_.size()) invalid("product '" + name + "' uses an unknown factor");
  const ProductSpace p = product(objects_[left].second, objects_[right].second);
  const std::size_t obj = add_object(name, p.space);
  const std::size_t lp = add_map(name + ".left", obj, left, PartialMap::from_total(p.left));
  const std::size_t rp = add_map(name + ".right", obj, right, PartialMap::from_total(p.right));
  products_.push_back(SiteProduct{obj, left, right, lp, rp});
  return obj;
}

std::size_t Site::add_symbol(Symbol symbol) {
  if (find_symbol(symbol.name)) invalid("duplicate symbol '" + symbol.name + "'");
  if (symbol.object >= objects_.size()) invalid("symbol '" + symbol.name + "' on an unknown object");
  symbols_.push_back(std::move(symbol));
  return symbols_.size() - 1;
}

const SiteProduct* Site::product_of(std::size_t i) const {
  for (const auto& p : products_) {
    if (p.object == i) return &p;
  }
  return nullptr;
}

std::optional<std::size_t> Site::find_object(const std::string& name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i].first == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Site::find_map(const std::string& name) const {
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (maps_[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Site::find_symbol(const std::string& name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].name == name) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

void complete_products(Bundle& b) {
  const Site& site = b.site;
  const std::size_t n = b.depth();
  const std::size_t objects = site.object_count();
  b.steps.resize(n == 0 ? 0 : n - 1);
  b.base.resize(n == 0 ? 0 : n - 1);
  for (auto& st : b.stages) {
    st.elements.resize(objects);
    st.maps.resize(site.maps().size());
  }
  for (auto& s : b.steps) s.resize(objects);
  for (auto& r : b.base) r.resize(objects);
  for (const auto& p : site.products()) {
    for (auto& st : b.stages) {
      const auto& l = st.elements[p.left];
      const auto& r = st.elements[p.right];
      std::vector<std::string> pairs;
      std::vector<std::optional<std::size_t>> lp, rp;
      for (std::size_t a = 0; a < l.size(); ++a) {
        for (std::size_t c = 0; c < r.size(); ++c) {
          pairs.push_back("(" + l[a] + "," + r[c] + ")");
          lp.emplace_back(a);
          rp.emplace_back(c);
        }
      }
      st.elements[p.object] = std::move(pairs);
      st.maps[p.left_projection] = std::move(lp);
      st.maps[p.right_projection] = std::move(rp);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const auto& sl = b.steps[i][p.left];
      const auto& sr = b.steps[i][p.right];
      const std::size_t ny = b.stages[i].elements[p.right].size();
      const std::size_t ny2 = b.stages[i + 1].elements[p.right].size();
      std::vector<std::size_t> step(b.stages[i].elements[p.object].size());
      if (sl.size() * sr.size() == step.size()) {
        for (std::size_t a = 0; a < sl.size(); ++a) {
          for (std::size_t c = 0; c < sr.size(); ++c) step[pair_index(a, c, ny)] = pair_index(sl[a], sr[c], ny2);
        }
      }
      b.steps[i][p.object] = std::move(step);
      BinaryRelation& base = b.base[i][p.object];
      const std::size_t rows = b.stages[i].elements[p.object].size();
      const std::size_t cols = b.stages[i + 1].elements[p.object].size();
      if (base.source_size() != rows || base.target_size() != cols) base = BinaryRelation(rows, cols);
    }
  }
}

void validate_bundle(const Bundle& b) {
  const Site& site = b.site;
  const std::size_t n = b.depth();
  const std::size_t objects = site.object_count();
  if (b.steps.size() != (n == 0 ? 0 : n - 1) || b.base.size() != b.steps.size()) {
    invalid("steps and base relations must be given between consecutive stages");
  }
  auto sz = [&](std::size_t i, std::size_t x) { return b.stages[i].elements[x].size(); };
  for (std::size_t i = 0; i < n; ++i) {
    const ModelStage& st = b.stages[i];
    const std::string at = " at stage " + std::to_string(i);
    if (st.elements.size() != objects || st.maps.size() != site.maps().size() ||
        st.symbols.size() != site.symbols().size()) {
      invalid("stage " + std::to_string(i) + " does not cover every object, map and symbol");
    }
    for (std::size_t m = 0; m < site.maps().size(); ++m) {
      const SiteMap& f = site.maps()[m];
      if (st.maps[m].size() != sz(i, f.from)) invalid("action of '" + f.name + "' has the wrong size" + at);
      for (const auto& v : st.maps[m]) {
        if (v && *v >= sz(i, f.to)) invalid("action of '" + f.name + "' out of range" + at);
      }
    }
    for (std::size_t s = 0; s < site.symbols().size(); ++s) {
      const Symbol& sym = site.symbols()[s];
      const PointSet& m = st.symbols[s];
      if (m.universe() != sz(i, sym.object)) invalid("symbol '" + sym.name + "' has the wrong size" + at);
      for (std::size_t o : sym.operands) {
        if (o >= site.symbols().size() || site.symbols()[o].object != sym.object) {
          invalid("symbol '" + sym.name + "' combines symbols of other objects");
        }
      }
      bool ok = true;
      switch (sym.op) {
        case Symbol::Op::Atom: break;
        case Symbol::Op::And: ok = m == (st.symbols[sym.operands.at(0)] & st.symbols[sym.operands.at(1)]); break;
        case Symbol::Op::Or: ok = m == (st.symbols[sym.operands.at(0)] | st.symbols[sym.operands.at(1)]); break;
        case Symbol::Op::Not: ok = m == st.symbols[sym.operands.at(0)].complement(); break;
      }
      if (!ok) invalid("symbol '" + sym.name + "' does not match its Boolean definition" + at);
      if (sym.diamond) {
        const Symbol& d = site.symbols().at(*sym.diamond);
        if (d.object != sym.object) invalid("diamond of '" + sym.name + "' lives on another object");
        if (!m.is_subset_of(st.symbols[*sym.diamond])) {
          invalid("M(" + sym.name + ") is not inside M(" + d.name + ")" + at);
        }
      }
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::string at = " between stages " + std::to_string(i) + " and " + std::to_string(i + 1);
    if (b.steps[i].size() != objects || b.base[i].size() != objects) invalid("steps or base missing" + at);
    for (std::size_t x = 0; x < objects; ++x) {
      const auto& step = b.steps[i][x];
      if (step.size() != sz(i, x)) invalid("step of '" + site.object_name(x) + "' has the wrong size" + at);
      for (std::size_t v : step) {
        if (v >= sz(i + 1, x)) invalid("step of '" + site.object_name(x) + "' out of range" + at);
      }
      const BinaryRelation& r = b.base[i][x];
      if (r.source_size() != sz(i, x) || r.target_size() != sz(i + 1, x)) {
        invalid("base relation of '" + site.object_name(x) + "' has the wrong shape" + at);
      }
    }
    for (std::size_t s = 0; s < site.symbols().size(); ++s) {
      const Symbol& sym = site.symbols()[s];
      const auto& step = b.steps[i][sym.object];
      for (std::size_t x = 0; x < step.size(); ++x) {
        if (b.stages[i].symbols[s].test(x) != b.stages[i + 1].symbols[s].test(step[x])) {
          invalid("step does not preserve and reflect '" + sym.name + "' at element " + std::to_string(x) + at);
        }
      }
    }
    for (std::size_t m = 0; m < site.maps().size(); ++m) {
      const SiteMap& f = site.maps()[m];
      const auto& sx = b.steps[i][f.from];
      const auto& sy = b.steps[i][f.to];
      for (std::size_t x = 0; x < sx.size(); ++x) {
        const auto v = b.stages[i].maps[m][x];
        if (!v) continue;
        const auto w = b.stages[i + 1].maps[m][sx[x]];
        if (!w || *w != sy[*v]) invalid("action of '" + f.name + "' is not natural at element " + std::to_string(x) + at);
      }
    }
  }
}

Bundle truncate(const Bundle& b, std::size_t depth) {
  if (depth == 0 || depth > b.depth()) {
    throw Error(ErrorKind::InvalidInput, "truncation depth must lie in 1.." + std::to_string(b.depth()));
  }
  Bundle out;
  out.site = b.site;
  out.stages.assign(b.stages.begin(), b.stages.begin() + static_cast<std::ptrdiff_t>(depth));
  out.steps.assign(b.steps.begin(), b.steps.begin() + static_cast<std::ptrdiff_t>(depth - 1));
  out.base.assign(b.base.begin(), b.base.begin() + static_cast<std::ptrdiff_t>(depth - 1));
  return out;
}

std::vector<std::vector<BinaryRelation>> effective_base(const Bundle& b) {
  auto eff = b.base;
  for (std::size_t i = 0; i < eff.size(); ++i) {
    for (std::size_t x = 0; x < eff[i].size(); ++x) {
      eff[i][x] |= BinaryRelation::graph_of(b.stages[i + 1].elements[x].size(), b.steps[i][x]);
    }
    for (const auto& p : b.site.products()) eff[i][p.object] |= pairing(eff[i][p.left], eff[i][p.right]);
  }
  return eff;
}

namespace {

std::optional<HypothesisWitness> hypothesis_violation(
    const Bundle& b, const std::vector<std::vector<BinaryRelation>>& eff) {
  const auto& symbols = b.site.symbols();
  for (std::size_t i = 0; i + 1 < b.depth(); ++i) {
    for (std::size_t s = 0; s < symbols.size(); ++s) {
      if (!symbols[s].diamond) continue;
      const PointSet pre = eff[i][symbols[s].object].preimage(b.stages[i + 1].symbols[s]);
      const PointSet bad = pre - b.stages[i].symbols[*symbols[s].diamond];
      if (bad.any()) {
        const std::size_t e = bad.indices().front();
        return HypothesisWitness{s, i, e, symbols[s].name, b.stages[i].elements[symbols[s].object][e]};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<HypothesisWitness> find_hypothesis_violation(const Bundle& b) {
  return hypothesis_violation(b, effective_base(b));
}

// ---------------------------------------------------------------------------

RelFamily::RelFamily(const Bundle& b) : depth_(b.depth()) {
  rels_.resize(b.site.object_count());
  for (std::size_t x = 0; x < rels_.size(); ++x) {
    rels_[x].resize(depth_ * depth_);
    for (std::size_t i = 0; i < depth_; ++i) {
      for (std::size_t j = i + 1; j < depth_; ++j) {
        rels_[x][i * depth_ + j] = BinaryRelation(b.stages[i].elements[x].size(), b.stages[j].elements[x].size());
      }
    }
  }
}

const BinaryRelation& RelFamily::at(std::size_t object, std::size_t i, std::size_t j) const {
  if (i >= j || j >= depth_) throw Error(ErrorKind::InvalidInput, "relation index needs i < j < depth");
  return rels_.at(object)[i * depth_ + j];
}

BinaryRelation& RelFamily::at(std::size_t object, std::size_t i, std::size_t j) {
  if (i >= j || j >= depth_) throw Error(ErrorKind::InvalidInput, "relation index needs i < j < depth");
  return rels_.at(object)[i * depth_ + j];
}

bool RelFamily::is_subset_of(const RelFamily& other) const {
  if (depth_ != other.depth_ || rels_.size() != other.rels_.size()) return false;
  for (std::size_t x = 0; x < rels_.size(); ++x) {
    for (std::size_t i = 0; i < depth_; ++i) {
      for (std::size_t j = i + 1; j < depth_; ++j) {
        if (!at(x, i, j).is_subset_of(other.at(x, i, j))) return false;
      }
    }
  }
  return true;
}

Closure close_relations(const Bundle& b, bool trace) {
  validate_bundle(b);
  const auto eff = effective_base(b);
  if (auto w = hypothesis_violation(b, eff)) {
    const Symbol& sym = b.site.symbols()[w->symbol];
    throw HypothesisViolated("R_" + std::to_string(w->stage) + "^-1 M(" + sym.name + ") contains element '" +
                                 b.stages[w->stage].elements[sym.object][w->element] + "' outside M(" +
                                 b.site.symbols()[*sym.diamond].name + ") at stage " + std::to_string(w->stage),
                             *w);
  }
  const Site& site = b.site;
  const std::size_t n = b.depth();
  Closure out{RelFamily(b), {}};
  RelFamily& fam = out.family;
  auto add = [&](std::size_t x, std::size_t i, std::size_t j, std::size_t a, std::size_t c, const char* rule,
                 auto&& detail) {
    BinaryRelation& r = fam.at(x, i, j);
    if (r.contains(a, c)) return false;
    r.insert(a, c);
    if (trace) out.trace.push_back(TraceEntry{x, i, j, a, c, rule, detail()});
    return true;
  };

  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t x = 0; x < site.object_count(); ++x) {
      for (auto [a, c] : eff[i][x].pairs()) add(x, i, i + 1, a, c, "L1", [] { return std::string("base relation"); });
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < site.object_count(); ++x) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          for (std::size_t k = j + 1; k < n; ++k) {
            for (auto [a, m] : fam.at(x, i, j).pairs()) {
              fam.at(x, j, k).row(m).for_each([&](std::size_t c) {
                changed |= add(x, i, k, a, c, "L2", [&] {
                  return "composition through element " + std::to_string(m) + " of stage " + std::to_string(j);
                });
              });
            }
          }
        }
      }
    }
    for (std::size_t m = 0; m < site.maps().size(); ++m) {
      const SiteMap& f = site.maps()[m];
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          for (auto [a, c] : fam.at(f.from, i, j).pairs()) {
            const auto fa = b.stages[i].maps[m][a];
            const auto fc = b.stages[j].maps[m][c];
            if (!fa || !fc) continue;
            changed |= add(f.to, i, j, *fa, *fc, "L3", [&] {
              return "image under '" + f.name + "' of (" + std::to_string(a) + "," + std::to_string(c) + ")";
            });
          }
        }
      }
    }
    for (const auto& p : site.products()) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const auto& pl_i = b.stages[i].maps[p.left_projection];
          const auto& pr_i = b.stages[i].maps[p.right_projection];
          const auto& pl_j = b.stages[j].maps[p.left_projection];
          const auto& pr_j = b.stages[j].maps[p.right_projection];
          for (std::size_t u = 0; u < pl_i.size(); ++u) {
            for (std::size_t v = 0; v < pl_j.size(); ++v) {
              if (!fam.at(p.left, i, j).contains(*pl_i[u], *pl_j[v])) continue;
              if (!fam.at(p.right, i, j).contains(*pr_i[u], *pr_j[v])) continue;
              changed |= add(p.object, i, j, u, v, "L4", [&] {
                return "pairing of related components in '" + site.object_name(p.left) + "' and '" +
                       site.object_name(p.right) + "'";
              });
            }
          }
        }
      }
    }
  }
  return out;
}

Report validate_family(const Bundle& b, const RelFamily& fam) {
  const Site& site = b.site;
  const std::size_t n = b.depth();
  const auto eff = effective_base(b);
  LawResult l1{.law = "L1"};
  for (std::size_t i = 0; i + 1 < n && l1.pass; ++i) {
    for (std::size_t x = 0; x < site.object_count(); ++x) {
      ++l1.checked;
      if (!eff[i][x].is_subset_of(fam.at(x, i, i + 1))) {
        l1.pass = false;
        l1.witness = Json{{"object", site.object_name(x)}, {"i", i}};
        break;
      }
    }
  }
  LawResult l2{.law = "L2"};
  for (std::size_t x = 0; x < site.object_count() && l2.pass; ++x) {
    for (std::size_t i = 0; i < n && l2.pass; ++i) {
      for (std::size_t j = i + 1; j < n && l2.pass; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          ++l2.checked;
          if (!fam.at(x, i, j).then(fam.at(x, j, k)).is_subset_of(fam.at(x, i, k))) {
            l2.pass = false;
            l2.witness = Json{{"object", site.object_name(x)}, {"i", i}, {"j", j}, {"k", k}};
            break;
          }
        }
      }
    }
  }
  LawResult l3{.law = "L3"};
  for (std::size_t m = 0; m < site.maps().size() && l3.pass; ++m) {
    const SiteMap& f = site.maps()[m];
    for (std::size_t i = 0; i < n && l3.pass; ++i) {
      for (std::size_t j = i + 1; j < n && l3.pass; ++j) {
        for (auto [a, c] : fam.at(f.from, i, j).pairs()) {
          const auto fa = b.stages[i].maps[m][a];
          const auto fc = b.stages[j].maps[m][c];
          if (!fa || !fc) continue;
          ++l3.checked;
          if (!fam.at(f.to, i, j).contains(*fa, *fc)) {
            l3.pass = false;
            l3.witness = Json{{"map", f.name}, {"i", i}, {"j", j}, {"pair", {a, c}}};
            break;
          }
        }
      }
    }
  }
  LawResult l4{.law = "L4"};
  for (const auto& p : site.products()) {
    for (std::size_t i = 0; i < n && l4.pass; ++i) {
      for (std::size_t j = i + 1; j < n && l4.pass; ++j) {
        ++l4.checked;
        const BinaryRelation want = pairing(fam.at(p.left, i, j), fam.at(p.right, i, j));
        if (!want.is_subset_of(fam.at(p.object, i, j))) {
          l4.pass = false;
          l4.witness = Json{{"product", site.object_name(p.object)}, {"i", i}, {"j", j}};
        }
      }
    }
  }
  Report report;
  report.add(std::move(l1));
  report.add(std::move(l2));
  report.add(std::move(l3));
  report.add(std::move(l4));
  return report;
}

Report verify_l5(const Bundle& b, const RelFamily& fam) {
  const auto& symbols = b.site.symbols();
  const std::size_t n = b.depth();
  LawResult l5{.law = "L5"};
  for (std::size_t s = 0; s < symbols.size() && l5.pass; ++s) {
    if (!symbols[s].diamond) continue;
    const std::size_t x = symbols[s].object;
    for (std::size_t i = 0; i < n && l5.pass; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        ++l5.checked;
        const PointSet bad =
            fam.at(x, i, j).preimage(b.stages[j].symbols[s]) - b.stages[i].symbols[*symbols[s].diamond];
        if (bad.any()) {
          l5.pass = false;
          const std::size_t e = bad.indices().front();
          l5.witness = Json{{"symbol", symbols[s].name}, {"i", i}, {"j", j}, {"element", e},
                            {"element_name", b.stages[i].elements[x][e]}};
          break;
        }
      }
    }
  }
  Report report;
  report.add(std::move(l5));
  return report;
}

// ---------------------------------------------------------------------------

Assembly assemble_top_model(const Bundle& b, const RelFamily& fam) {
  const Site& site = b.site;
  const std::size_t n = b.depth();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "assembly needs at least one stage");
  Assembly out;
  for (std::size_t x = 0; x < site.object_count(); ++x) {
    std::vector<std::vector<std::string>> stages;
    std::vector<std::vector<std::size_t>> steps;
    for (std::size_t i = 0; i < n; ++i) stages.push_back(b.stages[i].elements[x]);
    for (std::size_t i = 0; i + 1 < n; ++i) steps.push_back(b.steps[i][x]);
    RelSeq s(std::move(stages), std::move(steps));
    for (std::size_t i = 0; i < n; ++i) {
      s.set_rel(i, i, BinaryRelation::identity(s.stage(i).size()));
      for (std::size_t j = i + 1; j < n; ++j) s.set_rel(i, j, fam.at(x, i, j));
    }
    out.colimits.push_back(colimit(s));
    out.sequences.push_back(std::move(s));
  }

  const auto eff = effective_base(b);
  LawResult backward{.law = "backward_inclusion"};
  LawResult forward{.law = "forward_inclusion"};
  out.diagnostics = Json::object();
  Json per_symbol = Json::array();
  for (std::size_t s = 0; s < site.symbols().size(); ++s) {
    const Symbol& sym = site.symbols()[s];
    if (!sym.diamond) continue;
    const std::size_t x = sym.object;
    const FiniteSpace& space = out.colimits[x].space;
    const PointSet& phi = b.stages[n - 1].symbols[s];
    const PointSet& dia = b.stages[n - 1].symbols[*sym.diamond];
    const PointSet cl = space.closure(phi);
    const bool fwd = dia.is_subset_of(cl);
    const bool bwd = cl.is_subset_of(dia);
    ++forward.checked;
    ++backward.checked;
    if (forward.pass && !fwd) {
      forward.pass = false;
      forward.witness = Json{{"symbol", sym.name}, {"stage", n - 1}, {"missing", subset_json(dia - cl)},
                             {"note", "last stage has no successor stage"}};
    }
    if (backward.pass && !bwd) {
      backward.pass = false;
      backward.witness = Json{{"symbol", sym.name}, {"extra", subset_json(cl - dia)}};
    }
    Json by_stage = Json::array();
    Json ext = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      const PointSet& dia_i = b.stages[i].symbols[*sym.diamond];
      if (i + 1 < n) {
        const PointSet reach = fam.at(x, i, i + 1).preimage(b.stages[i + 1].symbols[s]);
        by_stage.push_back(dia_i.is_subset_of(reach));
        ext.push_back(dia_i == eff[i][x].preimage(b.stages[i + 1].symbols[s]));
      } else {
        by_stage.push_back(dia_i.is_subset_of(b.stages[i].symbols[s]));
      }
    }
    per_symbol.push_back(Json{{"symbol", sym.name},
                              {"diamond", site.symbols()[*sym.diamond].name},
                              {"object", site.object_name(x)},
                              {"closure", subset_json(cl)},
                              {"forward", fwd},
                              {"backward", bwd},
                              {"forward_by_stage", by_stage},
                              {"extension_equality_by_stage", ext}});
  }
  out.diagnostics["symbols"] = per_symbol;
  out.report.add(std::move(backward));
  out.report.add(std::move(forward));

  LawResult surj{.law = "surjections_preserved"};
  LawResult cont{.law = "maps_continuous"};
  for (std::size_t m = 0; m < site.maps().size(); ++m) {
    const SiteMap& f = site.maps()[m];
    const auto& last = b.stages[n - 1].maps[m];
    PartialMap pm(out.colimits[f.from].space, out.colimits[f.to].space, last);
    ++cont.checked;
    if (cont.pass && !is_continuous_partial(pm)) {
      cont.pass = false;
      cont.witness = Json{{"map", f.name}};
    }
    bool surjective_everywhere = true;
    for (std::size_t i = 0; i < n; ++i) {
      PointSet hit(b.stages[i].elements[f.to].size());
      bool total = true;
      for (const auto& v : b.stages[i].maps[m]) {
        if (v) hit.set(*v); else total = false;
      }
      surjective_everywhere = surjective_everywhere && total && hit.is_full();
    }
    if (!surjective_everywhere) continue;
    ++surj.checked;
    if (surj.pass && !(pm.is_total() && pm.range().is_full())) {
      surj.pass = false;
      surj.witness = Json{{"map", f.name}};
    }
  }
  LawResult joins{.law = "join_transfer"};
  for (std::size_t s = 0; s < site.symbols().size(); ++s) {
    const Symbol& sym = site.symbols()[s];
    if (sym.op != Symbol::Op::Or) continue;
    bool covering = true;
    for (std::size_t i = 0; i < n; ++i) covering = covering && b.stages[i].symbols[s].is_full();
    if (!covering) continue;
    ++joins.checked;
    const PointSet u = b.stages[n - 1].symbols[sym.operands[0]] | b.stages[n - 1].symbols[sym.operands[1]];
    if (joins.pass && !u.is_full()) {
      joins.pass = false;
      joins.witness = Json{{"symbol", sym.name}};
    }
  }
  out.report.add(std::move(cont));
  out.report.add(std::move(surj));
  out.report.add(std::move(joins));
  return out;
}

// ---------------------------------------------------------------------------

Bundle random_bundle(Rng& rng, const BundleGenOptions& opt) {
  Bundle b;
  Site& site = b.site;
  const std::size_t total = rng.between(1, std::max<std::size_t>(opt.max_objects, 1));
  const bool with_product = total >= 2 && rng.chance(1, 2);
  const std::size_t plain = with_product ? total - 1 : total;
  for (std::size_t k = 0; k < plain; ++k) {
    site.add_object("X" + std::to_string(k), random_space(rng, opt.max_points));
  }
  if (with_product) {
    const std::size_t l = rng.below(plain);
    const std::size_t r = rng.below(plain);
    site.add_product("P", l, r);
  }
  const std::size_t nmaps = rng.below(3);
  for (std::size_t k = 0; k < nmaps; ++k) {
    const std::size_t from = rng.below(site.object_count());
    const std::size_t to = rng.below(site.object_count());
    PartialMap f = random_continuous_map(rng, site.object_space(from), site.object_space(to), rng.chance(1, 2));
    site.add_map("f" + std::to_string(k), from, to, std::move(f));
  }
  std::vector<PointSet> values;
  for (std::size_t x = 0; x < site.object_count(); ++x) {
    const FiniteSpace& sp = site.object_space(x);
    const std::string obj = site.object_name(x);
    const std::size_t atoms = rng.between(1, 2);
    std::vector<std::size_t> atom_ids;
    for (std::size_t k = 0; k < atoms; ++k) {
      const PointSet a = rng.subset(sp.size());
      const std::string name = "phi_" + obj + "_" + std::to_string(k);
      const std::size_t d = site.add_symbol(Symbol{"dia_" + name, x, std::nullopt, Symbol::Op::Atom, {}});
      values.push_back(sp.closure(a));
      const std::size_t s = site.add_symbol(Symbol{name, x, d, Symbol::Op::Atom, {}});
      values.push_back(a);
      atom_ids.push_back(s);
    }
    if (atoms == 2) {
      const PointSet u = values[atom_ids[0]] | values[atom_ids[1]];
      const std::string name = "join_" + obj;
      const std::size_t d = site.add_symbol(Symbol{"dia_" + name, x, std::nullopt, Symbol::Op::Atom, {}});
      values.push_back(sp.closure(u));
      site.add_symbol(Symbol{name, x, d, Symbol::Op::Or, atom_ids});
      values.push_back(u);
    }
  }
  const std::size_t n = rng.between(1, std::max<std::size_t>(opt.max_stages, 1));
  for (std::size_t i = 0; i < n; ++i) {
    ModelStage st;
    for (std::size_t x = 0; x < site.object_count(); ++x) st.elements.push_back(site.object_space(x).points());
    for (const auto& f : site.maps()) st.maps.push_back(f.map.values());
    st.symbols = values;
    b.stages.push_back(std::move(st));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<std::vector<std::size_t>> steps;
    std::vector<BinaryRelation> base;
    for (std::size_t x = 0; x < site.object_count(); ++x) {
      const FiniteSpace& sp = site.object_space(x);
      std::vector<std::size_t> id(sp.size());
      for (std::size_t p = 0; p < id.size(); ++p) id[p] = p;
      steps.push_back(std::move(id));
      BinaryRelation r(sp.size(), sp.size());
      for (std::size_t p = 0; p < sp.size(); ++p) {
        sp.neighborhood(p).for_each([&](std::size_t q) {
          if (rng.chance(1, 2)) r.insert(p, q);
        });
      }
      base.push_back(std::move(r));
    }
    b.steps.push_back(std::move(steps));
    b.base.push_back(std::move(base));
  }
  complete_products(b);
  return b;
}

std::optional<Bundle> break_hypothesis(Rng& rng, const Bundle& b) {
  struct Candidate {
    std::size_t i, object, x, y;
  };
  std::vector<Candidate> candidates;
  const auto& symbols = b.site.symbols();
  for (std::size_t i = 0; i + 1 < b.depth(); ++i) {
    for (std::size_t s = 0; s < symbols.size(); ++s) {
      if (!symbols[s].diamond) continue;
      const std::size_t obj = symbols[s].object;
      const PointSet outside = b.stages[i].symbols[*symbols[s].diamond].complement();
      outside.for_each([&](std::size_t x) {
        b.stages[i + 1].symbols[s].for_each([&](std::size_t y) { candidates.push_back({i, obj, x, y}); });
      });
    }
  }
  if (candidates.empty()) return std::nullopt;
  const Candidate c = candidates[rng.below(candidates.size())];
  Bundle out = b;
  out.base[c.i][c.object].insert(c.x, c.y);
  return out;
}

}  // namespace topocat
