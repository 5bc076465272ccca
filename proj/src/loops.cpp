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


#include "topocat/loops.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "topocat/error.hpp"

namespace topocat {

struct LoopExpr::Node {
  Kind kind;
  FiniteSpace anchor;
  std::size_t length = 0;
  std::size_t depth = 0;
  std::size_t position = 0;
  PartialMap map;
  std::optional<LoopExpr> a;
  std::optional<LoopExpr> b;
};

namespace {

const char* kind_name(LoopExpr::Kind k) {
  switch (k) {
    case LoopExpr::Kind::Empty: return "empty";
    case LoopExpr::Kind::InsertId: return "insert_id";
    case LoopExpr::Kind::Concat: return "concat";
    case LoopExpr::Kind::Conjugate: return "conjugate";
    case LoopExpr::Kind::Product: return "product";
  }
  return "?";
}

}  // namespace

LoopExpr LoopExpr::empty(FiniteSpace anchor) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Empty;
  n->anchor = std::move(anchor);
  return LoopExpr(std::move(n));
}

LoopExpr LoopExpr::insert_id(LoopExpr inner, std::size_t position) {
  if (position > inner.length()) {
    throw Error(ErrorKind::InvalidInput, "identity position " + std::to_string(position) +
                                             " beyond loop length " +
                                             std::to_string(inner.length()));
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::InsertId;
  n->anchor = inner.anchor();
  n->length = inner.length() + 1;
  n->depth = inner.depth() + 1;
  n->position = position;
  n->a = std::move(inner);
  return LoopExpr(std::move(n));
}

LoopExpr LoopExpr::concat(LoopExpr left, LoopExpr right) {
  if (!(left.anchor() == right.anchor())) {
    throw Error(ErrorKind::AnchorMismatch, "concatenated loops have different anchors");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Concat;
  n->anchor = left.anchor();
  n->length = left.length() + right.length();
  n->depth = std::max(left.depth(), right.depth()) + 1;
  n->a = std::move(left);
  n->b = std::move(right);
  return LoopExpr(std::move(n));
}

LoopExpr LoopExpr::conjugate(PartialMap f, LoopExpr inner) {
  if (!(f.source() == inner.anchor())) {
    throw Error(ErrorKind::AnchorMismatch, "inner loop is not anchored at the source of the map");
  }
  if (!is_continuous_partial(f)) {
    throw Error(ErrorKind::NotContinuous, "conjugating map is not continuous on its domain");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Conjugate;
  n->anchor = f.target();
  n->length = inner.length() + 2;
  n->depth = inner.depth() + 1;
  n->map = std::move(f);
  n->a = std::move(inner);
  return LoopExpr(std::move(n));
}

LoopExpr LoopExpr::product(LoopExpr left, LoopExpr right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->anchor = topocat::product(left.anchor(), right.anchor()).space;
  n->length = std::max(left.length(), right.length());
  n->depth = std::max(left.depth(), right.depth()) + 1;
  n->a = std::move(left);
  n->b = std::move(right);
  return LoopExpr(std::move(n));
}

LoopExpr::Kind LoopExpr::kind() const { return node_->kind; }
const FiniteSpace& LoopExpr::anchor() const { return node_->anchor; }
std::size_t LoopExpr::length() const { return node_->length; }
std::size_t LoopExpr::depth() const { return node_->depth; }

const LoopExpr& LoopExpr::inner() const {
  if (!node_->a || node_->b) {
    throw Error(ErrorKind::InvalidInput, std::string("no inner loop on ") + kind_name(kind()));
  }
  return *node_->a;
}

const LoopExpr& LoopExpr::left() const {
  if (!node_->b) throw Error(ErrorKind::InvalidInput, std::string("no operands on ") + kind_name(kind()));
  return *node_->a;
}

const LoopExpr& LoopExpr::right() const {
  if (!node_->b) throw Error(ErrorKind::InvalidInput, std::string("no operands on ") + kind_name(kind()));
  return *node_->b;
}

std::size_t LoopExpr::position() const { return node_->position; }

const PartialMap& LoopExpr::map() const { return node_->map; }

bool LoopExpr::total_only() const {
  switch (kind()) {
    case Kind::Empty: return true;
    case Kind::InsertId: return inner().total_only();
    case Kind::Concat:
    case Kind::Product: return left().total_only() && right().total_only();
    case Kind::Conjugate: return map().is_total() && inner().total_only();
  }
  return true;
}

// ---------------------------------------------------------------------------

std::vector<FiniteSpace> Loop::stages() const {
  std::vector<FiniteSpace> xs{anchor};
  for (std::size_t k = 0; k < rels.size(); ++k) {
    if (!(rels[k].target() == xs.back())) {
      throw Error(ErrorKind::TypeMismatch, "relation R_" + std::to_string(k + 1) +
                                               " does not land in X_" + std::to_string(k));
    }
    xs.push_back(rels[k].source());
  }
  if (!(xs.back() == anchor)) {
    throw Error(ErrorKind::TypeMismatch, "the last relation does not start at the anchor");
  }
  return xs;
}

Loop realize(const LoopExpr& e) {
  using Kind = LoopExpr::Kind;
  switch (e.kind()) {
    case Kind::Empty: return Loop{e.anchor(), {}};
    case Kind::InsertId: {
      Loop inner = realize(e.inner());
      const auto xs = inner.stages();
      const std::size_t p = e.position();
      inner.rels.insert(inner.rels.begin() + static_cast<std::ptrdiff_t>(p), Relation::identity(xs[p]));
      return inner;
    }
    case Kind::Concat: {
      Loop l = realize(e.left());
      Loop r = realize(e.right());
      l.rels.insert(l.rels.end(), r.rels.begin(), r.rels.end());
      return l;
    }
    case Kind::Conjugate: {
      Loop inner = realize(e.inner());
      const Relation g = graph(e.map());
      Loop out{e.anchor(), {g}};
      out.rels.insert(out.rels.end(), inner.rels.begin(), inner.rels.end());
      out.rels.push_back(converse(g));
      return out;
    }
    case Kind::Product: {
      Loop l = realize(e.left());
      Loop r = realize(e.right());
      const std::size_t n = std::max(l.length(), r.length());
      while (l.rels.size() < n) l.rels.push_back(Relation::identity(l.anchor));
      while (r.rels.size() < n) r.rels.push_back(Relation::identity(r.anchor));
      Loop out{e.anchor(), {}};
      for (std::size_t k = 0; k < n; ++k) out.rels.push_back(product_rel(l.rels[k], r.rels[k]));
      return out;
    }
  }
  throw Error(ErrorKind::InvalidInput, "unknown loop constructor");
}

PointSet lc_operator(const Loop& loop, const PointSet& a, bool leading_closure) {
  if (a.universe() != loop.anchor.size()) {
    throw Error(ErrorKind::SpaceMismatch, "subset does not live in the anchor");
  }
  const std::size_t n = loop.rels.size();
  PointSet cur = a;
  for (std::size_t k = n; k >= 1; --k) {
    const Relation& r = loop.rels[k - 1];
    if (cur.universe() != r.source().size()) {
      throw Error(ErrorKind::TypeMismatch, "relation R_" + std::to_string(k) + " does not compose");
    }
    cur = image(r, cur);
    if (k > 1 || leading_closure) cur = r.target().closure(cur);
  }
  if (n == 0 && leading_closure) cur = loop.anchor.closure(cur);
  return cur;
}

Report lc_check_raw(const Loop& loop, std::uint64_t cap) {
  loop.stages();
  LawResult r{.law = "loop_contraction"};
  auto res = sweep_subsets(loop.anchor.size(), cap, SweepFallback::Singletons, [&](const PointSet& a) {
    return lc_operator(loop, a).is_subset_of(loop.anchor.closure(a));
  });
  r.checked = res.checked;
  if (res.failure) {
    r.pass = false;
    r.witness["A"] = subset_json(*res.failure);
    r.witness["lhs"] = subset_json(lc_operator(loop, *res.failure));
    r.witness["closure_A"] = subset_json(loop.anchor.closure(*res.failure));
  }
  Report report;
  report.add(std::move(r));
  return report;
}

Report lc_check(const LoopExpr& e, std::uint64_t cap) { return lc_check_raw(realize(e), cap); }

// ---------------------------------------------------------------------------

namespace {

TotalMap product_map(const TotalMap& f, const TotalMap& g) {
  const ProductSpace src = product(f.source(), g.source());
  const ProductSpace tgt = product(f.target(), g.target());
  std::vector<std::size_t> values(src.space.size());
  for (std::size_t x = 0; x < f.source().size(); ++x) {
    for (std::size_t y = 0; y < g.source().size(); ++y) {
      values[pair_index(x, y, g.source().size())] = pair_index(f(x), g(y), g.target().size());
    }
  }
  return TotalMap(src.space, tgt.space, std::move(values));
}

}  // namespace

AuxSequence auxiliary_sequence(const LoopExpr& e) {
  using Kind = LoopExpr::Kind;
  switch (e.kind()) {
    case Kind::Empty: return AuxSequence{e.anchor(), {TotalMap::identity(e.anchor())}};
    case Kind::InsertId: {
      AuxSequence inner = auxiliary_sequence(e.inner());
      const std::size_t p = e.position();
      inner.maps.insert(inner.maps.begin() + static_cast<std::ptrdiff_t>(p) + 1, inner.maps[p]);
      return inner;
    }
    case Kind::Concat: {
      AuxSequence l = auxiliary_sequence(e.left());
      AuxSequence r = auxiliary_sequence(e.right());
      l.maps.insert(l.maps.end(), r.maps.begin() + 1, r.maps.end());
      return l;
    }
    case Kind::Conjugate: {
      if (!e.map().is_total()) {
        throw Error(ErrorKind::PartialMapPresent,
                    "conjugation by a properly partial map (domain " + e.map().domain().to_string() + ")");
      }
      const TotalMap f = e.map().to_total();
      AuxSequence inner = auxiliary_sequence(e.inner());
      AuxSequence out{e.anchor(), {TotalMap::identity(e.anchor())}};
      for (const auto& g : inner.maps) out.maps.push_back(then(g, f));
      out.maps.push_back(TotalMap::identity(e.anchor()));
      return out;
    }
    case Kind::Product: {
      AuxSequence l = auxiliary_sequence(e.left());
      AuxSequence r = auxiliary_sequence(e.right());
      const std::size_t n = std::max(l.maps.size(), r.maps.size());
      while (l.maps.size() < n) l.maps.push_back(l.maps.back());
      while (r.maps.size() < n) r.maps.push_back(r.maps.back());
      AuxSequence out{e.anchor(), {}};
      for (std::size_t k = 0; k < n; ++k) out.maps.push_back(product_map(l.maps[k], r.maps[k]));
      return out;
    }
  }
  throw Error(ErrorKind::InvalidInput, "unknown loop constructor");
}

Report validate_aux(const Loop& loop, const AuxSequence& aux) {
  const auto xs = loop.stages();
  const std::size_t n = loop.length();
  Report report;

  LawResult shape{.law = "aux_shape", .checked = aux.maps.size()};
  if (aux.maps.size() != n + 1) {
    shape.pass = false;
    shape.witness["expected_length"] = n + 1;
    shape.witness["length"] = aux.maps.size();
    report.add(std::move(shape));
    return report;
  }
  for (std::size_t k = 0; k <= n && shape.pass; ++k) {
    if (!(aux.maps[k].source() == xs[k]) || !(aux.maps[k].target() == loop.anchor)) {
      shape.pass = false;
      shape.witness["k"] = k;
    } else if (!is_continuous(aux.maps[k])) {
      shape.pass = false;
      shape.witness["k"] = k;
      shape.witness["reason"] = "G_k is not continuous";
    }
  }
  const bool typed = shape.pass;
  report.add(std::move(shape));
  if (!typed) return report;

  LawResult ends{.law = "aux_endpoints", .checked = 2};
  const TotalMap id = TotalMap::identity(loop.anchor);
  if (!(aux.maps.front() == id)) {
    ends.pass = false;
    ends.witness["k"] = 0;
  } else if (!(aux.maps.back() == id)) {
    ends.pass = false;
    ends.witness["k"] = n;
  }
  report.add(std::move(ends));

  LawResult inv{.law = "aux_invariant"};
  for (std::size_t k = 0; k < n; ++k) {
    ++inv.checked;
    const Relation lhs = compose(loop.rels[k], graph(aux.maps[k]));
    const Relation rhs = graph(aux.maps[k + 1]);
    if (!is_subrelation(lhs, rhs)) {
      inv.pass = false;
      inv.witness["k"] = k;
      for (auto [x, y] : lhs.pairs()) {
        if (!rhs.contains(x, y)) {
          inv.witness["pair"] = Json::array({x, y});
          break;
        }
      }
      break;
    }
  }
  report.add(std::move(inv));
  return report;
}

LawResult replay_aux(const Loop& loop, const AuxSequence& aux, const PointSet& a) {
  const auto xs = loop.stages();
  const std::size_t n = loop.length();
  LawResult r{.law = "aux_replay", .checked = 1};
  auto fail = [&](const char* step, std::size_t k) {
    r.pass = false;
    r.witness["A"] = subset_json(a);
    r.witness["step"] = step;
    r.witness["k"] = k;
  };
  std::vector<PointSet> d(n + 1);
  d[n] = a;
  for (std::size_t k = n; k >= 1; --k) d[k - 1] = xs[k - 1].closure(image(loop.rels[k - 1], d[k]));
  std::vector<PointSet> q(n + 1);
  for (std::size_t k = 0; k <= n; ++k) q[k] = loop.anchor.closure(aux.maps[k].image(d[k]));
  if (!(q[0] == lc_operator(loop, a))) {
    fail("start", 0);
    return r;
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!q[k].is_subset_of(q[k + 1])) {
      fail("monotone", k);
      return r;
    }
  }
  if (!(q[n] == loop.anchor.closure(a))) fail("end", n);
  return r;
}

LawResult replay_aux_all(const Loop& loop, const AuxSequence& aux, std::uint64_t cap) {
  LawResult out{.law = "aux_replay"};
  // Each Q_k is union-preserving in A, so the singleton fallback is exact.
  auto res = sweep_subsets(loop.anchor.size(), cap, SweepFallback::Singletons,
                           [&](const PointSet& a) {
                             LawResult one = replay_aux(loop, aux, a);
                             if (!one.pass) out.witness = one.witness;
                             return one.pass;
                           });
  out.checked = res.checked;
  out.pass = !res.failure.has_value();
  if (out.pass) out.witness = Json::object();
  return out;
}

// ---------------------------------------------------------------------------

namespace {

const std::vector<FiniteSpace>& topologies_on(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<FiniteSpace>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    EnumerationOptions opts;
    opts.strategy = EnumerationStrategy::Preorders;
    opts.max_points = n;
    it = cache.emplace(n, enumerate_topologies(n, opts)).first;
  }
  return it->second;
}

struct Shape {
  FiniteSpace space;
  std::optional<std::pair<FiniteSpace, FiniteSpace>> factors;
};

LoopExpr generate(Rng& rng, const LoopGenOptions& opt, const Shape& shape, std::size_t depth) {
  if (depth == 0) return LoopExpr::empty(shape.space);
  const bool can_product = opt.allow_products && shape.factors.has_value();
  // Weights: Empty 1, InsertId 2, Concat 2, Conjugate 3, Product 2.
  const std::uint64_t total = can_product ? 10 : 8;
  const std::uint64_t draw = rng.below(total);
  if (draw < 1) return LoopExpr::empty(shape.space);
  if (draw < 3) {
    LoopExpr inner = generate(rng, opt, shape, depth - 1);
    const std::size_t pos = rng.below(inner.length() + 1);
    return LoopExpr::insert_id(std::move(inner), pos);
  }
  if (draw < 5) {
    LoopExpr l = generate(rng, opt, shape, depth - 1);
    LoopExpr r = generate(rng, opt, shape, depth - 1);
    return LoopExpr::concat(std::move(l), std::move(r));
  }
  if (draw < 8) {
    const FiniteSpace x = random_space(rng, opt.max_points);
    PartialMap f = random_continuous_map(rng, x, shape.space, opt.total_only);
    LoopExpr inner = generate(rng, opt, Shape{x, std::nullopt}, depth - 1);
    return LoopExpr::conjugate(std::move(f), std::move(inner));
  }
  LoopExpr l = generate(rng, opt, Shape{shape.factors->first, std::nullopt}, depth - 1);
  LoopExpr r = generate(rng, opt, Shape{shape.factors->second, std::nullopt}, depth - 1);
  return LoopExpr::product(std::move(l), std::move(r));
}

}  // namespace

FiniteSpace random_space(Rng& rng, std::size_t max_points) {
  const std::size_t n = rng.between(1, std::max<std::size_t>(max_points, 1));
  const auto& all = topologies_on(n);
  return all[rng.below(all.size())];
}

PartialMap random_continuous_map(Rng& rng, const FiniteSpace& source, const FiniteSpace& target,
                                 bool total) {
  const std::size_t m = target.size();
  PointSet dom = total ? source.full_set() : rng.subset(source.size());
  if (m == 0) {
    if (total && source.size() > 0) {
      throw Error(ErrorKind::InvalidInput, "no total map into the empty space");
    }
    return PartialMap::empty(source, target);
  }
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<std::optional<std::size_t>> values(source.size());
    dom.for_each([&](std::size_t x) { values[x] = rng.below(m); });
    PartialMap f(source, target, std::move(values));
    if (is_continuous_partial(f)) return f;
  }
  const std::size_t c = rng.below(m);
  std::vector<std::optional<std::size_t>> values(source.size());
  dom.for_each([&](std::size_t x) { values[x] = c; });
  return PartialMap(source, target, std::move(values));
}

LoopExpr random_loop_expr(Rng& rng, const LoopGenOptions& options) {
  Shape shape;
  if (options.allow_products && rng.chance(1, 3)) {
    FiniteSpace a = random_space(rng, options.max_points);
    FiniteSpace b = random_space(rng, options.max_points);
    shape.space = product(a, b).space;
    shape.factors = std::make_pair(std::move(a), std::move(b));
  } else {
    shape.space = random_space(rng, options.max_points);
  }
  const std::size_t depth = rng.between(0, options.max_depth);
  return generate(rng, options, shape, depth);
}

Loop random_raw_loop(Rng& rng, std::size_t length, std::size_t max_points) {
  Loop loop;
  loop.anchor = random_space(rng, max_points);
  std::vector<FiniteSpace> xs{loop.anchor};
  for (std::size_t k = 1; k < length; ++k) xs.push_back(random_space(rng, max_points));
  xs.push_back(loop.anchor);
  for (std::size_t k = 1; k <= length; ++k) {
    const FiniteSpace& src = xs[k];
    const FiniteSpace& tgt = xs[k - 1];
    BinaryRelation r(src.size(), tgt.size());
    for (std::size_t x = 0; x < src.size(); ++x) {
      for (std::size_t y = 0; y < tgt.size(); ++y) {
        if (rng.chance(1, 3)) r.insert(x, y);
      }
    }
    loop.rels.emplace_back(src, tgt, std::move(r));
  }
  return loop;
}

}  // namespace topocat
