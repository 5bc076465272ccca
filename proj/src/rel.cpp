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


#include "topocat/rel.hpp"

#include "topocat/error.hpp"
#include "topocat/rng.hpp"

namespace topocat {

namespace {

constexpr std::uint64_t kWitnessCap = std::uint64_t{1} << 20;

void require_same(const FiniteSpace& a, const FiniteSpace& b, const char* what) {
  if (!(a == b)) throw Error(ErrorKind::SpaceMismatch, what);
}

}  // namespace

BinaryRelation::BinaryRelation(std::size_t source_size, std::size_t target_size)
    : target_size_(target_size), rows_(source_size, PointSet(target_size)) {}

BinaryRelation BinaryRelation::identity(std::size_t n) {
  BinaryRelation r(n, n);
  for (std::size_t i = 0; i < n; ++i) r.insert(i, i);
  return r;
}

BinaryRelation BinaryRelation::full(std::size_t source_size, std::size_t target_size) {
  BinaryRelation r(source_size, target_size);
  for (auto& row : r.rows_) row = PointSet::full(target_size);
  return r;
}

BinaryRelation BinaryRelation::from_pairs(
    std::size_t source_size, std::size_t target_size,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  BinaryRelation r(source_size, target_size);
  for (auto [x, y] : pairs) {
    if (x >= source_size || y >= target_size) {
      throw Error(ErrorKind::InvalidInput, "pair (" + std::to_string(x) + "," + std::to_string(y) +
                                               ") out of range");
    }
    r.insert(x, y);
  }
  return r;
}

BinaryRelation BinaryRelation::graph_of(std::size_t target_size,
                                        const std::vector<std::size_t>& values) {
  BinaryRelation r(values.size(), target_size);
  for (std::size_t x = 0; x < values.size(); ++x) {
    if (values[x] >= target_size) throw Error(ErrorKind::InvalidInput, "map value out of range");
    r.insert(x, values[x]);
  }
  return r;
}

std::size_t BinaryRelation::size() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.count();
  return n;
}

std::vector<std::pair<std::size_t, std::size_t>> BinaryRelation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    rows_[x].for_each([&](std::size_t y) { out.emplace_back(x, y); });
  }
  return out;
}

PointSet BinaryRelation::domain() const {
  PointSet d(rows_.size());
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    if (rows_[x].any()) d.set(x);
  }
  return d;
}

bool BinaryRelation::is_functional() const {
  for (const auto& row : rows_) {
    if (row.count() > 1) return false;
  }
  return true;
}

void BinaryRelation::require_shape(const BinaryRelation& other) const {
  if (source_size() != other.source_size() || target_size_ != other.target_size_) {
    throw Error(ErrorKind::SpaceMismatch, "relations of different shapes");
  }
}

bool BinaryRelation::is_subset_of(const BinaryRelation& other) const {
  require_shape(other);
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    if (!rows_[x].is_subset_of(other.rows_[x])) return false;
  }
  return true;
}

BinaryRelation& BinaryRelation::operator|=(const BinaryRelation& other) {
  require_shape(other);
  for (std::size_t x = 0; x < rows_.size(); ++x) rows_[x] |= other.rows_[x];
  return *this;
}

PointSet BinaryRelation::image(const PointSet& a) const {
  if (a.universe() != rows_.size()) throw Error(ErrorKind::SpaceMismatch, "image of a foreign subset");
  PointSet out(target_size_);
  a.for_each([&](std::size_t x) { out |= rows_[x]; });
  return out;
}

PointSet BinaryRelation::preimage(const PointSet& b) const {
  if (b.universe() != target_size_) {
    throw Error(ErrorKind::SpaceMismatch, "preimage of a foreign subset");
  }
  PointSet out(rows_.size());
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    if (rows_[x].intersects(b)) out.set(x);
  }
  return out;
}

BinaryRelation BinaryRelation::then(const BinaryRelation& next) const {
  if (target_size_ != next.source_size()) {
    throw Error(ErrorKind::SpaceMismatch, "composite of relations that do not meet");
  }
  BinaryRelation out(rows_.size(), next.target_size_);
  for (std::size_t x = 0; x < rows_.size(); ++x) out.rows_[x] = next.image(rows_[x]);
  return out;
}

BinaryRelation BinaryRelation::converse() const {
  BinaryRelation out(target_size_, rows_.size());
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    rows_[x].for_each([&](std::size_t y) { out.insert(y, x); });
  }
  return out;
}

// ---------------------------------------------------------------------------

Relation::Relation(FiniteSpace source, FiniteSpace target, BinaryRelation rel)
    : source_(std::move(source)), target_(std::move(target)), rel_(std::move(rel)) {
  if (rel_.source_size() != source_.size() || rel_.target_size() != target_.size()) {
    throw Error(ErrorKind::InvalidInput, "relation shape does not match its spaces");
  }
}

Relation Relation::empty(const FiniteSpace& source, const FiniteSpace& target) {
  return Relation(source, target, BinaryRelation(source.size(), target.size()));
}

Relation Relation::identity(const FiniteSpace& space) {
  return Relation(space, space, BinaryRelation::identity(space.size()));
}

Relation Relation::from_pairs(const FiniteSpace& source, const FiniteSpace& target,
                              const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  return Relation(source, target, BinaryRelation::from_pairs(source.size(), target.size(), pairs));
}

Relation compose(const Relation& r, const Relation& s) {
  require_same(r.target(), s.source(), "composite of relations that do not meet");
  return Relation(r.source(), s.target(), r.rel().then(s.rel()));
}

Relation converse(const Relation& r) { return Relation(r.target(), r.source(), r.rel().converse()); }

PointSet image(const Relation& r, const PointSet& a) { return r.rel().image(a); }

PointSet preimage(const Relation& r, const PointSet& b) { return r.rel().preimage(b); }

bool is_subrelation(const Relation& r, const Relation& s) {
  require_same(r.source(), s.source(), "comparison of relations with different sources");
  require_same(r.target(), s.target(), "comparison of relations with different targets");
  return r.rel().is_subset_of(s.rel());
}

// ---------------------------------------------------------------------------

PartialMap::PartialMap(FiniteSpace source, FiniteSpace target,
                       std::vector<std::optional<std::size_t>> values)
    : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
  if (values_.size() != source_.size()) {
    throw Error(ErrorKind::InvalidInput, "partial map needs one entry per source point");
  }
  for (const auto& v : values_) {
    if (v && *v >= target_.size()) {
      throw Error(ErrorKind::InvalidInput, "partial map value " + std::to_string(*v) + " out of range");
    }
  }
}

PartialMap PartialMap::from_relation(const Relation& r) {
  std::vector<std::optional<std::size_t>> values(r.source().size());
  for (std::size_t x = 0; x < values.size(); ++x) {
    const PointSet& row = r.rel().row(x);
    if (row.count() > 1) {
      throw Error(ErrorKind::NotFunctional,
                  "point " + std::to_string(x) + " is related to " + row.to_string());
    }
    if (row.any()) values[x] = row.indices().front();
  }
  return PartialMap(r.source(), r.target(), std::move(values));
}

PartialMap PartialMap::from_total(const TotalMap& f) {
  std::vector<std::optional<std::size_t>> values(f.values().begin(), f.values().end());
  return PartialMap(f.source(), f.target(), std::move(values));
}

PartialMap PartialMap::partial_identity(const FiniteSpace& space, const PointSet& domain) {
  if (domain.universe() != space.size()) throw Error(ErrorKind::SpaceMismatch, "foreign domain");
  std::vector<std::optional<std::size_t>> values(space.size());
  domain.for_each([&](std::size_t x) { values[x] = x; });
  return PartialMap(space, space, std::move(values));
}

PartialMap PartialMap::empty(const FiniteSpace& source, const FiniteSpace& target) {
  return PartialMap(source, target, std::vector<std::optional<std::size_t>>(source.size()));
}

PointSet PartialMap::domain() const {
  PointSet d(source_.size());
  for (std::size_t x = 0; x < values_.size(); ++x) {
    if (values_[x]) d.set(x);
  }
  return d;
}

bool PartialMap::is_total() const {
  for (const auto& v : values_) {
    if (!v) return false;
  }
  return true;
}

TotalMap PartialMap::to_total() const {
  std::vector<std::size_t> values(values_.size());
  for (std::size_t x = 0; x < values_.size(); ++x) {
    if (!values_[x]) {
      throw Error(ErrorKind::NotFunctional, "point " + std::to_string(x) + " has no value");
    }
    values[x] = *values_[x];
  }
  return TotalMap(source_, target_, std::move(values));
}

PointSet PartialMap::image(const PointSet& a) const {
  if (a.universe() != source_.size()) throw Error(ErrorKind::SpaceMismatch, "image of a foreign subset");
  PointSet out(target_.size());
  a.for_each([&](std::size_t x) {
    if (values_[x]) out.set(*values_[x]);
  });
  return out;
}

PointSet PartialMap::preimage(const PointSet& b) const {
  if (b.universe() != target_.size()) {
    throw Error(ErrorKind::SpaceMismatch, "preimage of a foreign subset");
  }
  PointSet out(source_.size());
  for (std::size_t x = 0; x < values_.size(); ++x) {
    if (values_[x] && b.test(*values_[x])) out.set(x);
  }
  return out;
}

PartialMap PartialMap::restrict_to(const PointSet& a) const {
  if (a.universe() != source_.size()) throw Error(ErrorKind::SpaceMismatch, "foreign restriction");
  auto values = values_;
  for (std::size_t x = 0; x < values.size(); ++x) {
    if (!a.test(x)) values[x].reset();
  }
  return PartialMap(source_, target_, std::move(values));
}

Relation graph(const TotalMap& f) {
  return Relation(f.source(), f.target(), BinaryRelation::graph_of(f.target().size(), f.values()));
}

Relation graph(const PartialMap& f) {
  BinaryRelation r(f.source().size(), f.target().size());
  for (std::size_t x = 0; x < f.values().size(); ++x) {
    if (f(x)) r.insert(x, *f(x));
  }
  return Relation(f.source(), f.target(), std::move(r));
}

PartialMap then(const PartialMap& f, const PartialMap& g) {
  require_same(f.target(), g.source(), "composite of partial maps that do not meet");
  std::vector<std::optional<std::size_t>> values(f.source().size());
  for (std::size_t x = 0; x < values.size(); ++x) {
    if (f(x)) values[x] = g(*f(x));
  }
  return PartialMap(f.source(), g.target(), std::move(values));
}

PartialImages pm_images(const PartialMap& f, const PointSet& a, const PointSet& b) {
  return PartialImages{f.image(a), f.preimage(b)};
}

DomainMap domain_map(const PartialMap& f) {
  Subspace dom = subspace(f.source(), f.domain());
  std::vector<std::size_t> values;
  values.reserve(dom.space.size());
  for (std::size_t k = 0; k < dom.space.size(); ++k) values.push_back(*f(dom.inclusion(k)));
  TotalMap t(dom.space, f.target(), std::move(values));
  return DomainMap{std::move(dom), std::move(t)};
}

Relation product_rel(const Relation& r, const Relation& s) {
  const ProductSpace src = product(r.source(), s.source());
  const ProductSpace tgt = product(r.target(), s.target());
  const std::size_t sy = s.source().size();
  const std::size_t ty = s.target().size();
  BinaryRelation out(src.space.size(), tgt.space.size());
  for (auto [x, x2] : r.pairs()) {
    for (auto [y, y2] : s.pairs()) out.insert(pair_index(x, y, sy), pair_index(x2, y2, ty));
  }
  return Relation(src.space, tgt.space, std::move(out));
}

bool is_continuous_partial(const PartialMap& f) { return is_continuous(domain_map(f).map); }

std::optional<PointSet> partial_continuity_witness(const PartialMap& f) {
  const FiniteSpace& x = f.source();
  const FiniteSpace& y = f.target();
  auto holds = [&](const PointSet& a) {
    return f.image(x.closure(f.preimage(a))).is_subset_of(y.closure(a));
  };
  return sweep_subsets(y.size(), kWitnessCap, SweepFallback::Singletons, holds).failure;
}

std::optional<PointSet> relation_continuity_witness(const Relation& r) {
  const FiniteSpace& x = r.source();
  const FiniteSpace& y = r.target();
  auto holds = [&](const PointSet& a) {
    return image(r, x.closure(preimage(r, a))).is_subset_of(y.closure(a));
  };
  return sweep_subsets(y.size(), kWitnessCap, SweepFallback::Singletons, holds).failure;
}

bool is_continuous_relation(const Relation& r) { return !relation_continuity_witness(r).has_value(); }

TotalMap graph_embedding(const PartialMap& f) {
  const DomainMap dm = domain_map(f);
  const ProductSpace xy = product(f.source(), f.target());
  std::vector<std::size_t> values(dm.domain.space.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    values[k] = pair_index(dm.domain.inclusion(k), dm.map(k), f.target().size());
  }
  return TotalMap(dm.domain.space, xy.space, std::move(values));
}

}  // namespace topocat
