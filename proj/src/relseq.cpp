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


#include "topocat/relseq.hpp"

#include <algorithm>
#include <numeric>

#include "topocat/error.hpp"

namespace topocat {

RelSeq::RelSeq(std::vector<std::vector<std::string>> stages,
               std::vector<std::vector<std::size_t>> steps)
    : stages_(std::move(stages)), steps_(std::move(steps)) {
  const std::size_t n = stages_.size();
  if (n == 0 ? !steps_.empty() : steps_.size() != n - 1) {
    throw Error(ErrorKind::InvalidInput, "a sequence of " + std::to_string(n) + " stages needs " +
                                             std::to_string(n == 0 ? 0 : n - 1) + " steps");
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (steps_[i].size() != stages_[i].size()) {
      throw Error(ErrorKind::InvalidInput, "step " + std::to_string(i) + " needs one value per point");
    }
    for (std::size_t v : steps_[i]) {
      if (v >= stages_[i + 1].size()) {
        throw Error(ErrorKind::InvalidInput, "step " + std::to_string(i) + " value out of range");
      }
    }
  }
  rels_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) rels_[i].emplace_back(stages_[i].size(), stages_[j].size());
  }
}

const BinaryRelation& RelSeq::rel(std::size_t i, std::size_t j) const {
  if (i > j || j >= depth()) throw Error(ErrorKind::InvalidInput, "no relation R_" + std::to_string(i) + "," + std::to_string(j));
  return rels_[i][j - i];
}

void RelSeq::set_rel(std::size_t i, std::size_t j, BinaryRelation r) {
  if (i > j || j >= depth()) throw Error(ErrorKind::InvalidInput, "no relation R_" + std::to_string(i) + "," + std::to_string(j));
  if (r.source_size() != stages_[i].size() || r.target_size() != stages_[j].size()) {
    throw Error(ErrorKind::InvalidInput, "relation R_" + std::to_string(i) + "," + std::to_string(j) +
                                             " has the wrong shape");
  }
  rels_[i][j - i] = std::move(r);
}

std::vector<std::size_t> RelSeq::composite(std::size_t i, std::size_t j) const {
  std::vector<std::size_t> out(stages_.at(i).size());
  std::iota(out.begin(), out.end(), std::size_t{0});
  for (std::size_t k = i; k < j; ++k) {
    for (auto& v : out) v = steps_[k][v];
  }
  return out;
}

RelSeq from_consecutive(std::vector<std::vector<std::string>> stages,
                        std::vector<std::vector<std::size_t>> steps,
                        std::vector<BinaryRelation> consecutive,
                        std::vector<std::optional<Preorder>> within) {
  RelSeq s(std::move(stages), std::move(steps));
  const std::size_t n = s.depth();
  if (consecutive.size() != (n == 0 ? 0 : n - 1)) {
    throw Error(ErrorKind::InvalidInput, "one consecutive relation per step required");
  }
  within.resize(n);
  std::vector<BinaryRelation> p(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t sz = s.stage(i).size();
    if (within[i]) {
      if (within[i]->size() != sz) throw Error(ErrorKind::InvalidInput, "preorder size mismatch");
      p[i] = BinaryRelation::from_pairs(sz, sz, within[i]->pairs());
    } else {
      p[i] = BinaryRelation::identity(sz);
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    consecutive[i] |= BinaryRelation::graph_of(s.stage(i + 1).size(), s.step(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    BinaryRelation acc = p[i];
    s.set_rel(i, i, acc);
    for (std::size_t j = i + 1; j < n; ++j) {
      acc = acc.then(consecutive[j - 1]).then(p[j]);
      s.set_rel(i, j, acc);
    }
  }
  const Report r = validate(s);
  if (!r.pass()) {
    throw Error(ErrorKind::InvalidSequence, "generated sequence is invalid: " + r.to_json().dump());
  }
  return s;
}

Report validate(const RelSeq& s) {
  const std::size_t n = s.depth();
  LawResult graphs{.law = "step_graphs"};
  for (std::size_t i = 0; i < n && graphs.pass; ++i) {
    for (std::size_t j = i; j < n && graphs.pass; ++j) {
      const auto comp = s.composite(i, j);
      for (std::size_t x = 0; x < comp.size(); ++x) {
        ++graphs.checked;
        if (!s.rel(i, j).contains(x, comp[x])) {
          graphs.pass = false;
          graphs.witness = Json{{"i", i}, {"j", j}, {"x", x}, {"step_image", comp[x]}};
          break;
        }
      }
    }
  }
  LawResult comp{.law = "composition"};
  for (std::size_t i = 0; i < n && comp.pass; ++i) {
    for (std::size_t j = i; j < n && comp.pass; ++j) {
      for (std::size_t k = j; k < n && comp.pass; ++k) {
        ++comp.checked;
        const BinaryRelation rr = s.rel(i, j).then(s.rel(j, k));
        if (rr.is_subset_of(s.rel(i, k))) continue;
        comp.pass = false;
        for (auto [x, z] : rr.pairs()) {
          if (s.rel(i, k).contains(x, z)) continue;
          const PointSet mid = s.rel(i, j).row(x) & s.rel(j, k).preimage(PointSet::singleton(s.stage(k).size(), z));
          comp.witness = Json{{"i", i}, {"j", j}, {"k", k}, {"x", x}, {"y", mid.indices().front()}, {"z", z}};
          break;
        }
      }
    }
  }
  Report report;
  report.add(std::move(graphs));
  report.add(std::move(comp));
  return report;
}

RelSeq from_poset(const std::vector<std::string>& points, const Preorder& order, std::size_t depth) {
  if (order.size() != points.size()) throw Error(ErrorKind::InvalidInput, "preorder size mismatch");
  std::vector<std::size_t> id(points.size());
  std::iota(id.begin(), id.end(), std::size_t{0});
  RelSeq s(std::vector<std::vector<std::string>>(depth, points),
           std::vector<std::vector<std::size_t>>(depth == 0 ? 0 : depth - 1, id));
  const BinaryRelation r = BinaryRelation::from_pairs(points.size(), points.size(), order.pairs());
  for (std::size_t i = 0; i < depth; ++i) {
    for (std::size_t j = i; j < depth; ++j) s.set_rel(i, j, r);
  }
  return s;
}

// ---------------------------------------------------------------------------

Rational Rational::parse(const std::string& text) {
  auto to_int = [&](const std::string& part) -> std::int64_t {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::BadMetric, "malformed distance '" + text + "'");
    }
    return std::stoll(part);
  };
  const auto slash = text.find('/');
  Rational r;
  if (slash == std::string::npos) {
    r.num = to_int(text);
  } else {
    r.num = to_int(text.substr(0, slash));
    r.den = to_int(text.substr(slash + 1));
    if (r.den == 0) throw Error(ErrorKind::BadMetric, "zero denominator in '" + text + "'");
  }
  return r;
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

bool operator<=(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num) * b.den <= static_cast<__int128>(b.num) * a.den;
}

bool operator==(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
}

namespace {

Rational add(const Rational& a, const Rational& b) {
  const __int128 num = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
  const __int128 den = static_cast<__int128>(a.den) * b.den;
  if (num > INT64_MAX || den > INT64_MAX) throw Error(ErrorKind::BadMetric, "distance overflow");
  return Rational{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

}  // namespace

RelSeq from_metric(const std::vector<std::string>& points,
                   const std::vector<std::vector<Rational>>& d, std::size_t depth) {
  const std::size_t n = points.size();
  if (d.size() != n) throw Error(ErrorKind::BadMetric, "distance matrix must be square");
  for (std::size_t x = 0; x < n; ++x) {
    if (d[x].size() != n) throw Error(ErrorKind::BadMetric, "distance matrix must be square");
    if (!(d[x][x] == Rational{})) {
      throw Error(ErrorKind::BadMetric, "non-zero diagonal at " + points[x]);
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (d[x][y].num < 0 || d[x][y].den <= 0) throw Error(ErrorKind::BadMetric, "negative distance");
      if (!(d[x][y] == d[y][x])) {
        throw Error(ErrorKind::BadMetric, "asymmetric at (" + points[x] + "," + points[y] + ")");
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (!(d[x][z] <= add(d[x][y], d[y][z]))) {
          throw Error(ErrorKind::BadMetric, "triangle inequality fails at (" + points[x] + "," +
                                                points[y] + "," + points[z] + ")");
        }
      }
    }
  }
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), std::size_t{0});
  RelSeq s(std::vector<std::vector<std::string>>(depth, points),
           std::vector<std::vector<std::size_t>>(depth == 0 ? 0 : depth - 1, id));
  for (std::size_t i = 0; i < depth; ++i) {
    for (std::size_t j = i; j < depth; ++j) {
      // 1/a - 1/b = (b - a) / (a b) with a = i + 1, b = j + 1.
      const auto a = static_cast<std::int64_t>(i + 1);
      const auto b = static_cast<std::int64_t>(j + 1);
      const Rational bound{b - a, a * b};
      BinaryRelation r(n, n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (d[x][y] <= bound) r.insert(x, y);
        }
      }
      s.set_rel(i, j, std::move(r));
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

Colimit colimit(const RelSeq& s) {
  const std::size_t n = s.depth();
  if (n == 0) throw Error(ErrorKind::InvalidSequence, "the colimit needs at least one stage");
  const Report r = validate(s);
  if (!r.pass()) throw Error(ErrorKind::InvalidSequence, r.to_json().dump());
  const std::size_t m = s.stage(n - 1).size();
  Colimit c;
  for (std::size_t i = 0; i < n; ++i) c.class_maps.push_back(s.composite(i, n - 1));
  std::vector<PointSet> subbasis;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<PointSet> row;
    for (std::size_t p = 0; p < s.stage(i).size(); ++p) {
      PointSet ip(m);
      for (std::size_t j = i; j < n; ++j) {
        s.rel(i, j).row(p).for_each([&](std::size_t q) { ip.set(c.class_maps[j][q]); });
      }
      subbasis.push_back(ip);
      row.push_back(std::move(ip));
    }
    c.basic.push_back(std::move(row));
  }
  c.space = FiniteSpace::from_subbasis(s.stage(n - 1), subbasis);
  return c;
}

RelSeq seq_product(const RelSeq& s, const RelSeq& t) {
  if (s.depth() != t.depth()) {
    throw Error(ErrorKind::DepthMismatch, "depths " + std::to_string(s.depth()) + " and " +
                                              std::to_string(t.depth()));
  }
  const std::size_t n = s.depth();
  std::vector<std::vector<std::string>> stages(n);
  std::vector<std::vector<std::size_t>> steps(n == 0 ? 0 : n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& a : s.stage(i)) {
      for (const auto& b : t.stage(i)) stages[i].push_back("(" + a + "," + b + ")");
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t ty = t.stage(i).size();
    const std::size_t ty2 = t.stage(i + 1).size();
    steps[i].resize(s.stage(i).size() * ty);
    for (std::size_t x = 0; x < s.stage(i).size(); ++x) {
      for (std::size_t y = 0; y < ty; ++y) {
        steps[i][pair_index(x, y, ty)] = pair_index(s.step(i)[x], t.step(i)[y], ty2);
      }
    }
  }
  RelSeq out(std::move(stages), std::move(steps));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const std::size_t ty = t.stage(i).size();
      const std::size_t ty2 = t.stage(j).size();
      BinaryRelation r(s.stage(i).size() * ty, s.stage(j).size() * ty2);
      for (auto [x, x2] : s.rel(i, j).pairs()) {
        for (auto [y, y2] : t.rel(i, j).pairs()) r.insert(pair_index(x, y, ty), pair_index(x2, y2, ty2));
      }
      out.set_rel(i, j, std::move(r));
    }
  }
  return out;
}

RelSeq truncate(const RelSeq& s, std::size_t depth) {
  if (depth > s.depth()) throw Error(ErrorKind::InvalidInput, "truncation deeper than the sequence");
  std::vector<std::vector<std::string>> stages(s.stages().begin(), s.stages().begin() + static_cast<std::ptrdiff_t>(depth));
  std::vector<std::vector<std::size_t>> steps(
      s.steps().begin(), s.steps().begin() + static_cast<std::ptrdiff_t>(depth == 0 ? 0 : depth - 1));
  RelSeq out(std::move(stages), std::move(steps));
  for (std::size_t i = 0; i < depth; ++i) {
    for (std::size_t j = i; j < depth; ++j) out.set_rel(i, j, s.rel(i, j));
  }
  return out;
}

// ---------------------------------------------------------------------------

Report validate_morphism(const RelSeq& s, const RelSeq& t, const SeqMorphism& m) {
  Report report;
  LawResult shape{.law = "morphism_shape", .checked = 1};
  if (s.depth() != t.depth() || m.maps.size() != s.depth()) {
    shape.pass = false;
    shape.witness["reason"] = "depths differ";
  } else {
    for (std::size_t i = 0; i < s.depth() && shape.pass; ++i) {
      bool ok = m.maps[i].size() == s.stage(i).size();
      for (std::size_t v : m.maps[i]) ok = ok && v < t.stage(i).size();
      if (!ok) {
        shape.pass = false;
        shape.witness["stage"] = i;
      }
    }
  }
  const bool shaped = shape.pass;
  report.add(std::move(shape));
  if (!shaped) return report;

  LawResult nat{.law = "naturality"};
  for (std::size_t i = 0; i + 1 < s.depth() && nat.pass; ++i) {
    for (std::size_t x = 0; x < s.stage(i).size(); ++x) {
      ++nat.checked;
      if (m.maps[i + 1][s.step(i)[x]] != t.step(i)[m.maps[i][x]]) {
        nat.pass = false;
        nat.witness = Json{{"stage", i}, {"x", x}};
        break;
      }
    }
  }
  report.add(std::move(nat));

  LawResult pres{.law = "relation_preservation"};
  for (std::size_t i = 0; i < s.depth() && pres.pass; ++i) {
    for (std::size_t j = i; j < s.depth() && pres.pass; ++j) {
      for (auto [x, y] : s.rel(i, j).pairs()) {
        ++pres.checked;
        if (!t.rel(i, j).contains(m.maps[i][x], m.maps[j][y])) {
          pres.pass = false;
          pres.witness = Json{{"i", i}, {"j", j}, {"x", x}, {"y", y}};
          break;
        }
      }
    }
  }
  report.add(std::move(pres));
  return report;
}

bool is_embedding_morphism(const RelSeq& s, const RelSeq& t, const SeqMorphism& m) {
  if (!validate_morphism(s, t, m).pass()) return false;
  for (std::size_t i = 0; i < s.depth(); ++i) {
    std::vector<std::size_t> v = m.maps[i];
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) return false;
  }
  for (std::size_t i = 0; i < s.depth(); ++i) {
    for (std::size_t j = i; j < s.depth(); ++j) {
      for (std::size_t x = 0; x < s.stage(i).size(); ++x) {
        for (std::size_t y = 0; y < s.stage(j).size(); ++y) {
          if (s.rel(i, j).contains(x, y) != t.rel(i, j).contains(m.maps[i][x], m.maps[j][y])) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

TotalMap colimit_map(const Colimit& cs, const Colimit& ct, const SeqMorphism& m) {
  if (m.maps.empty()) throw Error(ErrorKind::InvalidInput, "empty morphism");
  return TotalMap(cs.space, ct.space, m.maps.back());
}

Report check_basis(const RelSeq& s) {
  const Colimit c = colimit(s);
  const std::size_t n = s.depth();
  const std::size_t m = c.space.size();
  LawResult contains{.law = "basis_contains_point"};
  LawResult filtered{.law = "basis_filtered"};
  LawResult nbhd{.law = "basis_neighbourhood"};
  LawResult open{.law = "basic_open"};
  LawResult antitone{.law = "basic_antitone"};

  // fibres[x] lists every (stage, point) with class x.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> fibres(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < s.stage(i).size(); ++p) {
      const std::size_t x = c.class_maps[i][p];
      fibres[x].emplace_back(i, p);
      const PointSet& ip = c.basic[i][p];
      ++contains.checked;
      if (contains.pass && !ip.test(x)) {
        contains.pass = false;
        contains.witness = Json{{"stage", i}, {"p", p}};
      }
      ++open.checked;
      if (open.pass && !c.space.is_open(ip)) {
        open.pass = false;
        open.witness = Json{{"stage", i}, {"p", p}};
      }
    }
  }
  for (std::size_t x = 0; x < m; ++x) {
    const auto& fib = fibres[x];
    for (auto [i, p] : fib) {
      for (auto [j, q] : fib) {
        ++filtered.checked;
        if (!filtered.pass) continue;
        const PointSet meet = c.basic[i][p] & c.basic[j][q];
        const bool found = std::any_of(fib.begin(), fib.end(), [&](const auto& r) {
          return c.basic[r.first][r.second].is_subset_of(meet);
        });
        if (!found) {
          filtered.pass = false;
          filtered.witness = Json{{"x", x}, {"p", {i, p}}, {"q", {j, q}}};
        }
      }
    }
    ++nbhd.checked;
    const PointSet& nx = c.space.neighborhood(x);
    const bool inside = std::any_of(fib.begin(), fib.end(), [&](const auto& r) {
      return c.basic[r.first][r.second].is_subset_of(nx);
    });
    if (nbhd.pass && !inside) {
      nbhd.pass = false;
      nbhd.witness = Json{{"x", x}, {"neighbourhood", subset_json(nx)}};
    }
  }
  for (std::size_t i = 0; i < n && antitone.pass; ++i) {
    for (std::size_t j = i; j < n && antitone.pass; ++j) {
      for (auto [p, q] : s.rel(i, j).pairs()) {
        ++antitone.checked;
        if (!c.basic[j][q].is_subset_of(c.basic[i][p])) {
          antitone.pass = false;
          antitone.witness = Json{{"i", i}, {"j", j}, {"p", p}, {"q", q}};
          break;
        }
      }
    }
  }
  Report report;
  report.add(std::move(contains));
  report.add(std::move(filtered));
  report.add(std::move(nbhd));
  report.add(std::move(open));
  report.add(std::move(antitone));
  return report;
}

Report check_embedding_preservation(const RelSeq& s, const RelSeq& t, const SeqMorphism& m) {
  Report report;
  const Report mv = validate_morphism(s, t, m);
  report.append(mv, "morphism");
  if (!mv.pass()) return report;
  const Colimit cs = colimit(s);
  const Colimit ct = colimit(t);
  const TotalMap f = colimit_map(cs, ct, m);
  LawResult cont{.law = "colimit_continuous", .checked = 1};
  if (auto w = continuity_witness(f)) {
    cont.pass = false;
    cont.witness["open"] = subset_json(*w);
  }
  const bool continuous = cont.pass;
  report.add(std::move(cont));
  LawResult emb{.law = "embedding_preserved", .checked = 1};
  if (!is_embedding_morphism(s, t, m)) {
    emb.witness["note"] = "morphism is not an embedding; nothing to preserve";
  } else if (!continuous || !is_embedding(f)) {
    emb.pass = false;
    emb.witness["reason"] = "colimit map is not an embedding";
  }
  report.add(std::move(emb));
  return report;
}

Report check_product_preservation(const RelSeq& s, const RelSeq& t) {
  const RelSeq st = seq_product(s, t);
  const Colimit cs = colimit(s);
  const Colimit ct = colimit(t);
  const Colimit cst = colimit(st);
  LawResult rect{.law = "basic_rectangles"};
  for (std::size_t i = 0; i < s.depth() && rect.pass; ++i) {
    const std::size_t ty = t.stage(i).size();
    for (std::size_t p = 0; p < s.stage(i).size() && rect.pass; ++p) {
      for (std::size_t q = 0; q < ty; ++q) {
        ++rect.checked;
        if (!(cst.basic[i][pair_index(p, q, ty)] == rectangle(cs.basic[i][p], ct.basic[i][q]))) {
          rect.pass = false;
          rect.witness = Json{{"stage", i}, {"p", p}, {"q", q}};
          break;
        }
      }
    }
  }
  const ProductSpace prod = product(cs.space, ct.space);
  std::vector<std::size_t> id(cst.space.size());
  std::iota(id.begin(), id.end(), std::size_t{0});
  LawResult homeo{.law = "product_homeomorphism", .checked = 1};
  if (!is_homeomorphism(TotalMap(cst.space, prod.space, id))) {
    homeo.pass = false;
    homeo.witness["reason"] = "canonical map to the product of colimits is not a homeomorphism";
  }
  Report report;
  report.add(std::move(rect));
  report.add(std::move(homeo));
  return report;
}

SeqEqualizer seq_equalizer(const RelSeq& s, const RelSeq& t, const SeqMorphism& f,
                           const SeqMorphism& g) {
  if (!validate_morphism(s, t, f).pass() || !validate_morphism(s, t, g).pass()) {
    throw Error(ErrorKind::InvalidInput, "equalizer of invalid morphisms");
  }
  const std::size_t n = s.depth();
  std::vector<std::vector<std::size_t>> keep(n);
  std::vector<std::vector<std::size_t>> position(n);
  for (std::size_t i = 0; i < n; ++i) {
    position[i].assign(s.stage(i).size(), SIZE_MAX);
    for (std::size_t x = 0; x < s.stage(i).size(); ++x) {
      if (f.maps[i][x] == g.maps[i][x]) {
        position[i][x] = keep[i].size();
        keep[i].push_back(x);
      }
    }
  }
  std::vector<std::vector<std::string>> stages(n);
  std::vector<std::vector<std::size_t>> steps(n == 0 ? 0 : n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t x : keep[i]) stages[i].push_back(s.stage(i)[x]);
    if (i + 1 < n) {
      for (std::size_t x : keep[i]) steps[i].push_back(position[i + 1][s.step(i)[x]]);
    }
  }
  RelSeq e(std::move(stages), std::move(steps));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      BinaryRelation r(keep[i].size(), keep[j].size());
      for (std::size_t a = 0; a < keep[i].size(); ++a) {
        for (std::size_t b = 0; b < keep[j].size(); ++b) {
          if (s.rel(i, j).contains(keep[i][a], keep[j][b])) r.insert(a, b);
        }
      }
      e.set_rel(i, j, std::move(r));
    }
  }
  return SeqEqualizer{std::move(e), SeqMorphism{keep}};
}

Report check_equalizer_preservation(const RelSeq& s, const RelSeq& t, const SeqMorphism& f,
                                    const SeqMorphism& g) {
  const SeqEqualizer eq = seq_equalizer(s, t, f, g);
  const Colimit cs = colimit(s);
  const Colimit ct = colimit(t);
  const Colimit ce = colimit(eq.seq);
  const TotalMap cf = colimit_map(cs, ct, f);
  const TotalMap cg = colimit_map(cs, ct, g);
  PointSet agree(cs.space.size());
  for (std::size_t x = 0; x < cs.space.size(); ++x) {
    if (cf(x) == cg(x)) agree.set(x);
  }
  const TotalMap incl = colimit_map(ce, cs, eq.inclusion);
  LawResult image{.law = "equalizer_image", .checked = 1};
  const PointSet im = incl.image(ce.space.full_set());
  if (!(im == agree)) {
    image.pass = false;
    image.witness = Json{{"image", subset_json(im)}, {"agreement", subset_json(agree)}};
  }
  LawResult emb{.law = "equalizer_embedding", .checked = 1};
  if (!is_continuous(incl) || !is_embedding(incl)) {
    emb.pass = false;
    emb.witness["reason"] = "inclusion of the equalizer colimit is not an embedding";
  }
  Report report;
  report.add(std::move(image));
  report.add(std::move(emb));
  return report;
}

Json stabilization(const RelSeq& s) {
  Json out;
  out["depth"] = s.depth();
  if (s.depth() < 2) {
    out["last_step_bijective"] = false;
    out["stable"] = false;
    return out;
  }
  const auto& last = s.step(s.depth() - 2);
  std::vector<std::size_t> sorted = last;
  std::sort(sorted.begin(), sorted.end());
  const bool bijective = sorted.size() == s.stage(s.depth() - 1).size() &&
                         std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  out["last_step_bijective"] = bijective;
  bool stable = false;
  if (bijective) {
    const Colimit now = colimit(s);
    const Colimit before = colimit(truncate(s, s.depth() - 1));
    stable = is_homeomorphism(TotalMap(before.space, now.space, last));
  }
  out["stable"] = stable;
  return out;
}

// ---------------------------------------------------------------------------

RelSeq random_relseq(Rng& rng, std::size_t depth, std::size_t max_points) {
  std::vector<std::vector<std::string>> stages(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    const std::size_t sz = rng.between(1, max_points);
    for (std::size_t p = 0; p < sz; ++p) stages[i].push_back("s" + std::to_string(i) + "_" + std::to_string(p));
  }
  std::vector<std::vector<std::size_t>> steps(depth == 0 ? 0 : depth - 1);
  std::vector<BinaryRelation> consecutive;
  for (std::size_t i = 0; i + 1 < depth; ++i) {
    for (std::size_t p = 0; p < stages[i].size(); ++p) steps[i].push_back(rng.below(stages[i + 1].size()));
    BinaryRelation c(stages[i].size(), stages[i + 1].size());
    for (std::size_t x = 0; x < stages[i].size(); ++x) {
      for (std::size_t y = 0; y < stages[i + 1].size(); ++y) {
        if (rng.chance(1, 4)) c.insert(x, y);
      }
    }
    consecutive.push_back(std::move(c));
  }
  std::vector<std::optional<Preorder>> within;
  for (std::size_t i = 0; i < depth; ++i) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < stages[i].size(); ++x) {
      for (std::size_t y = 0; y < stages[i].size(); ++y) {
        if (x != y && rng.chance(1, 5)) pairs.emplace_back(x, y);
      }
    }
    within.push_back(Preorder::closure_of(stages[i].size(), pairs));
  }
  return from_consecutive(std::move(stages), std::move(steps), std::move(consecutive), std::move(within));
}

RelSeq random_relseq(Rng& rng, const RelSeqGenOptions& options) {
  return random_relseq(rng, rng.between(1, options.max_depth), options.max_points);
}

SeqEqualizer random_subsequence(Rng& rng, const RelSeq& t) {
  const std::size_t n = t.depth();
  std::vector<PointSet> sub;
  for (std::size_t i = 0; i < n; ++i) {
    PointSet e = rng.subset(t.stage(i).size());
    if (i > 0) {
      sub[i - 1].for_each([&](std::size_t x) { e.set(t.step(i - 1)[x]); });
    }
    if (e.none()) e.set(rng.below(t.stage(i).size()));
    sub.push_back(std::move(e));
  }
  // Later stages only grow, so the steps restrict to the chosen subsets.
  std::vector<std::vector<std::size_t>> keep(n);
  std::vector<std::vector<std::size_t>> position(n);
  std::vector<std::vector<std::string>> stages(n);
  for (std::size_t i = 0; i < n; ++i) {
    position[i].assign(t.stage(i).size(), SIZE_MAX);
    sub[i].for_each([&](std::size_t x) {
      position[i][x] = keep[i].size();
      keep[i].push_back(x);
      stages[i].push_back(t.stage(i)[x]);
    });
  }
  std::vector<std::vector<std::size_t>> steps(n == 0 ? 0 : n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t x : keep[i]) steps[i].push_back(position[i + 1][t.step(i)[x]]);
  }
  RelSeq s(std::move(stages), std::move(steps));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      BinaryRelation r(keep[i].size(), keep[j].size());
      for (std::size_t a = 0; a < keep[i].size(); ++a) {
        for (std::size_t b = 0; b < keep[j].size(); ++b) {
          if (t.rel(i, j).contains(keep[i][a], keep[j][b])) r.insert(a, b);
        }
      }
      s.set_rel(i, j, std::move(r));
    }
  }
  return SeqEqualizer{std::move(s), SeqMorphism{keep}};
}

RelSeq constant_full_seq(const std::vector<std::string>& points, std::size_t depth) {
  std::vector<std::size_t> id(points.size());
  std::iota(id.begin(), id.end(), std::size_t{0});
  RelSeq s(std::vector<std::vector<std::string>>(depth, points),
           std::vector<std::vector<std::size_t>>(depth == 0 ? 0 : depth - 1, id));
  for (std::size_t i = 0; i < depth; ++i) {
    for (std::size_t j = i; j < depth; ++j) s.set_rel(i, j, BinaryRelation::full(points.size(), points.size()));
  }
  return s;
}

SeqMorphism morphism_from_last(const RelSeq& s, const std::vector<std::size_t>& last) {
  SeqMorphism m;
  for (std::size_t i = 0; i < s.depth(); ++i) {
    std::vector<std::size_t> values;
    for (std::size_t c : s.composite(i, s.depth() - 1)) values.push_back(last.at(c));
    m.maps.push_back(std::move(values));
  }
  return m;
}

}  // namespace topocat
