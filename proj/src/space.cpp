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

#include "topocat/space.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "topocat/error.hpp"

namespace topocat {

struct FiniteSpace::Impl {
  std::vector<std::string> points;
  std::vector<PointSet> neighborhoods;
  std::unordered_map<std::string, std::size_t> index;
};

namespace {

void require_distinct(const std::vector<std::string>& points) {
  std::unordered_set<std::string> seen;
  for (const auto& p : points) {
    if (!seen.insert(p).second) {
      throw Error(ErrorKind::InvalidInput, "duplicate point identifier '" + p + "'");
    }
  }
}

void require_universe(const PointSet& s, std::size_t n, const char* what) {
  if (s.universe() != n) {
    throw Error(ErrorKind::InvalidInput, std::string(what) + " is not a subset of the " +
                                             std::to_string(n) + " points");
  }
}

}  // namespace

FiniteSpace::FiniteSpace() {
  static const auto empty = std::make_shared<const Impl>();
  impl_ = empty;
}

FiniteSpace::FiniteSpace(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

FiniteSpace FiniteSpace::from_neighborhoods(std::vector<std::string> points,
                                            std::vector<PointSet> neighborhoods) {
  const std::size_t n = points.size();
  require_distinct(points);
  if (neighborhoods.size() != n) {
    throw Error(ErrorKind::InvalidInput, "one neighbourhood per point required");
  }
  for (std::size_t x = 0; x < n; ++x) {
    require_universe(neighborhoods[x], n, "neighbourhood");
    if (!neighborhoods[x].test(x)) {
      throw Error(ErrorKind::NotATopology,
                  "neighbourhood of point " + std::to_string(x) + " does not contain it");
    }
    neighborhoods[x].for_each([&](std::size_t y) {
      if (!neighborhoods[y].is_subset_of(neighborhoods[x])) {
        throw Error(ErrorKind::NotATopology, "neighbourhood of " + std::to_string(x) +
                                                 " is not open: it misses part of the "
                                                 "neighbourhood of " +
                                                 std::to_string(y));
      }
    });
  }
  auto impl = std::make_shared<Impl>();
  impl->points = std::move(points);
  impl->neighborhoods = std::move(neighborhoods);
  for (std::size_t i = 0; i < impl->points.size(); ++i) impl->index.emplace(impl->points[i], i);
  return FiniteSpace(std::move(impl));
}

FiniteSpace FiniteSpace::from_opens(std::vector<std::string> points,
                                    const std::vector<PointSet>& opens) {
  const std::size_t n = points.size();
  require_distinct(points);
  std::unordered_set<PointSet, PointSetHash> family;
  for (const auto& u : opens) {
    require_universe(u, n, "open set");
    family.insert(u);
  }
  if (!family.contains(PointSet(n))) {
    throw Error(ErrorKind::NotATopology, "the empty set is missing");
  }
  if (!family.contains(PointSet::full(n))) {
    throw Error(ErrorKind::NotATopology, "the full set is missing");
  }
  std::vector<PointSet> members(family.begin(), family.end());
  std::sort(members.begin(), members.end(), canonical_less);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const auto& u = members[i];
      const auto& v = members[j];
      if (!family.contains(u | v)) {
        throw Error(ErrorKind::NotATopology,
                    "not closed under union: " + u.to_string() + " and " + v.to_string());
      }
      if (!family.contains(u & v)) {
        throw Error(ErrorKind::NotATopology,
                    "not closed under intersection: " + u.to_string() + " and " + v.to_string());
      }
    }
  }
  std::vector<PointSet> nbhd(n, PointSet::full(n));
  for (const auto& u : members) {
    u.for_each([&](std::size_t x) { nbhd[x] &= u; });
  }
  return from_neighborhoods(std::move(points), std::move(nbhd));
}

FiniteSpace FiniteSpace::from_subbasis(std::vector<std::string> points,
                                       const std::vector<PointSet>& subbasis) {
  const std::size_t n = points.size();
  // The minimal open set at x in the generated topology is the intersection
  // of the subbasic sets containing x (the empty intersection being X).
  std::vector<PointSet> nbhd(n, PointSet::full(n));
  for (const auto& s : subbasis) {
    require_universe(s, n, "subbasis set");
    s.for_each([&](std::size_t x) { nbhd[x] &= s; });
  }
  return from_neighborhoods(std::move(points), std::move(nbhd));
}

std::size_t FiniteSpace::size() const { return impl_->points.size(); }

const std::vector<std::string>& FiniteSpace::points() const { return impl_->points; }

const std::string& FiniteSpace::name(std::size_t i) const { return impl_->points.at(i); }

std::optional<std::size_t> FiniteSpace::index_of(const std::string& name) const {
  auto it = impl_->index.find(name);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

const PointSet& FiniteSpace::neighborhood(std::size_t x) const {
  return impl_->neighborhoods.at(x);
}

void FiniteSpace::require_member(const PointSet& a) const {
  if (a.universe() != size()) {
    throw Error(ErrorKind::SpaceMismatch, "subset of " + std::to_string(a.universe()) +
                                              " points used in a space of " +
                                              std::to_string(size()) + " points");
  }
}

PointSet FiniteSpace::closure(const PointSet& a) const {
  require_member(a);
  PointSet out(size());
  for (std::size_t x = 0; x < size(); ++x) {
    if (impl_->neighborhoods[x].intersects(a)) out.set(x);
  }
  return out;
}

PointSet FiniteSpace::interior(const PointSet& a) const {
  require_member(a);
  PointSet out(size());
  a.for_each([&](std::size_t x) {
    if (impl_->neighborhoods[x].is_subset_of(a)) out.set(x);
  });
  return out;
}

bool FiniteSpace::is_open(const PointSet& a) const { return interior(a) == a; }

bool FiniteSpace::is_closed(const PointSet& a) const { return closure(a) == a; }

std::vector<PointSet> FiniteSpace::opens(std::size_t cap) const {
  const std::size_t n = size();
  std::unordered_set<PointSet, PointSetHash> seen;
  std::vector<PointSet> frontier{PointSet(n)};
  seen.insert(PointSet(n));
  while (!frontier.empty()) {
    std::vector<PointSet> next;
    for (const auto& u : frontier) {
      for (std::size_t x = 0; x < n; ++x) {
        if (u.test(x)) continue;
        PointSet v = u | impl_->neighborhoods[x];
        if (seen.insert(v).second) {
          if (seen.size() > cap) {
            throw Error(ErrorKind::SizeCap, "more than " + std::to_string(cap) + " open sets");
          }
          next.push_back(std::move(v));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<PointSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool FiniteSpace::operator==(const FiniteSpace& other) const {
  if (impl_ == other.impl_) return true;
  return impl_->points == other.impl_->points &&
         impl_->neighborhoods == other.impl_->neighborhoods;
}

bool FiniteSpace::same_topology(const FiniteSpace& other) const {
  return impl_ == other.impl_ || impl_->neighborhoods == other.impl_->neighborhoods;
}

// ---------------------------------------------------------------------------

TotalMap::TotalMap(FiniteSpace source, FiniteSpace target, std::vector<std::size_t> values)
    : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
  if (values_.size() != source_.size()) {
    throw Error(ErrorKind::InvalidInput, "map needs one value per source point (" +
                                             std::to_string(source_.size()) + "), got " +
                                             std::to_string(values_.size()));
  }
  for (std::size_t v : values_) {
    if (v >= target_.size()) {
      throw Error(ErrorKind::InvalidInput, "map value " + std::to_string(v) + " out of range");
    }
  }
}

TotalMap TotalMap::identity(const FiniteSpace& space) {
  std::vector<std::size_t> values(space.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = i;
  return TotalMap(space, space, std::move(values));
}

TotalMap TotalMap::constant(const FiniteSpace& source, const FiniteSpace& target,
                            std::size_t value) {
  return TotalMap(source, target, std::vector<std::size_t>(source.size(), value));
}

PointSet TotalMap::image(const PointSet& a) const {
  if (a.universe() != source_.size()) throw Error(ErrorKind::SpaceMismatch, "image of a foreign subset");
  PointSet out(target_.size());
  a.for_each([&](std::size_t x) { out.set(values_[x]); });
  return out;
}

PointSet TotalMap::preimage(const PointSet& b) const {
  if (b.universe() != target_.size()) {
    throw Error(ErrorKind::SpaceMismatch, "preimage of a foreign subset");
  }
  PointSet out(source_.size());
  for (std::size_t x = 0; x < values_.size(); ++x) {
    if (b.test(values_[x])) out.set(x);
  }
  return out;
}

bool TotalMap::is_injective() const {
  return image(source_.full_set()).count() == source_.size();
}

bool TotalMap::is_surjective() const { return image(source_.full_set()).is_full(); }

TotalMap then(const TotalMap& first, const TotalMap& second) {
  if (!(first.target() == second.source())) {
    throw Error(ErrorKind::SpaceMismatch, "composite of maps that do not meet");
  }
  std::vector<std::size_t> values(first.source().size());
  for (std::size_t x = 0; x < values.size(); ++x) values[x] = second(first(x));
  return TotalMap(first.source(), second.target(), std::move(values));
}

// ---------------------------------------------------------------------------

ProductSpace product(const FiniteSpace& x, const FiniteSpace& y) {
  const std::size_t nx = x.size();
  const std::size_t ny = y.size();
  std::vector<std::string> names;
  names.reserve(nx * ny);
  std::vector<PointSet> nbhd;
  nbhd.reserve(nx * ny);
  std::vector<std::size_t> left(nx * ny);
  std::vector<std::size_t> right(nx * ny);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      names.push_back("(" + x.name(i) + "," + y.name(j) + ")");
      nbhd.push_back(rectangle(x.neighborhood(i), y.neighborhood(j)));
      left[pair_index(i, j, ny)] = i;
      right[pair_index(i, j, ny)] = j;
    }
  }
  FiniteSpace space = FiniteSpace::from_neighborhoods(std::move(names), std::move(nbhd));
  return ProductSpace{space, TotalMap(space, x, std::move(left)), TotalMap(space, y, std::move(right))};
}

PointSet rectangle(const PointSet& a, const PointSet& b) {
  const std::size_t ny = b.universe();
  PointSet out(a.universe() * ny);
  a.for_each([&](std::size_t i) { b.for_each([&](std::size_t j) { out.set(pair_index(i, j, ny)); }); });
  return out;
}

Subspace subspace(const FiniteSpace& x, const PointSet& a) {
  if (a.universe() != x.size()) throw Error(ErrorKind::SpaceMismatch, "subspace of a foreign subset");
  const auto members = a.indices();
  std::vector<std::size_t> position(x.size(), 0);
  for (std::size_t k = 0; k < members.size(); ++k) position[members[k]] = k;
  std::vector<std::string> names;
  std::vector<PointSet> nbhd;
  for (std::size_t p : members) {
    names.push_back(x.name(p));
    PointSet trace(members.size());
    (x.neighborhood(p) & a).for_each([&](std::size_t q) { trace.set(position[q]); });
    nbhd.push_back(std::move(trace));
  }
  FiniteSpace space = FiniteSpace::from_neighborhoods(std::move(names), std::move(nbhd));
  return Subspace{space, TotalMap(space, x, members)};
}

std::optional<PointSet> continuity_witness(const TotalMap& f) {
  // f is continuous iff f(N(x)) is inside N(f(x)) for every x; a failure
  // at x makes N(f(x)) an open set with a non-open preimage.
  for (std::size_t x = 0; x < f.source().size(); ++x) {
    const PointSet& target_nbhd = f.target().neighborhood(f(x));
    if (!f.image(f.source().neighborhood(x)).is_subset_of(target_nbhd)) return target_nbhd;
  }
  return std::nullopt;
}

bool is_continuous(const TotalMap& f) { return !continuity_witness(f).has_value(); }

Factorization factorize(const TotalMap& f) {
  if (!is_continuous(f)) throw Error(ErrorKind::NotContinuous, "cannot factorize a discontinuous map");
  const PointSet img = f.image(f.source().full_set());
  Subspace sub = subspace(f.target(), img);
  const auto members = img.indices();
  std::vector<std::size_t> position(f.target().size(), 0);
  for (std::size_t k = 0; k < members.size(); ++k) position[members[k]] = k;
  std::vector<std::size_t> values(f.source().size());
  for (std::size_t x = 0; x < values.size(); ++x) values[x] = position[f(x)];
  return Factorization{TotalMap(f.source(), sub.space, std::move(values)), sub.inclusion};
}

bool is_embedding(const TotalMap& f) {
  if (!is_continuous(f)) throw Error(ErrorKind::NotContinuous, "embedding test on a discontinuous map");
  if (!f.is_injective()) return false;
  // The initial topology along f has minimal opens f^-1(N(f(x))).
  for (std::size_t x = 0; x < f.source().size(); ++x) {
    if (!(f.preimage(f.target().neighborhood(f(x))) == f.source().neighborhood(x))) return false;
  }
  return true;
}

bool is_homeomorphism(const TotalMap& f) {
  return f.is_surjective() && is_continuous(f) && is_embedding(f);
}

bool is_hausdorff(const FiniteSpace& x) {
  const ProductSpace xx = product(x, x);
  PointSet diagonal(xx.space.size());
  for (std::size_t i = 0; i < x.size(); ++i) diagonal.set(pair_index(i, i, x.size()));
  return xx.space.is_closed(diagonal);
}

// ---------------------------------------------------------------------------

Preorder Preorder::from_pairs(std::size_t n,
                              const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Preorder p;
  p.up_.assign(n, PointSet(n));
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw Error(ErrorKind::InvalidInput, "preorder pair out of range");
    p.up_[a].set(b);
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!p.up_[x].test(x)) {
      throw Error(ErrorKind::NotAPreorder, "not reflexive at " + std::to_string(x));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    p.up_[x].for_each([&](std::size_t y) {
      if (!p.up_[y].is_subset_of(p.up_[x])) {
        const auto missing = (p.up_[y] - p.up_[x]).indices().front();
        throw Error(ErrorKind::NotAPreorder, "not transitive: " + std::to_string(x) + "<=" +
                                                 std::to_string(y) + "<=" +
                                                 std::to_string(missing));
      }
    });
  }
  return p;
}

Preorder Preorder::closure_of(std::size_t n,
                              const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<PointSet> up(n, PointSet(n));
  for (std::size_t x = 0; x < n; ++x) up[x].set(x);
  for (auto [a, b] : pairs) up.at(a).set(b);
  // Warshall on bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      if (up[x].test(k)) up[x] |= up[k];
    }
  }
  Preorder p;
  p.up_ = std::move(up);
  return p;
}

Preorder Preorder::discrete(std::size_t n) { return closure_of(n, {}); }

PointSet Preorder::down(std::size_t x) const {
  PointSet out(size());
  for (std::size_t y = 0; y < size(); ++y) {
    if (up_[y].test(x)) out.set(y);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Preorder::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x) {
    up_[x].for_each([&](std::size_t y) { out.emplace_back(x, y); });
  }
  return out;
}

FiniteSpace alexandroff_from_preorder(std::vector<std::string> points, const Preorder& order) {
  if (points.size() != order.size()) {
    throw Error(ErrorKind::InvalidInput, "preorder size differs from the number of points");
  }
  std::vector<PointSet> nbhd;
  nbhd.reserve(order.size());
  for (std::size_t x = 0; x < order.size(); ++x) nbhd.push_back(order.up(x));
  return FiniteSpace::from_neighborhoods(std::move(points), std::move(nbhd));
}

Preorder specialization_preorder(const FiniteSpace& x) {
  // x in closure({y}) iff y in N(x).
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < x.size(); ++a) {
    x.neighborhood(a).for_each([&](std::size_t b) { pairs.emplace_back(a, b); });
  }
  return Preorder::from_pairs(x.size(), pairs);
}

// ---------------------------------------------------------------------------

namespace {

void enumerate_families(std::size_t n, const std::function<void(const FiniteSpace&)>& visit) {
  const std::size_t subsets = std::size_t{1} << n;  // subsets of the point set
  const std::uint64_t full = subsets - 1;
  const std::uint64_t families = std::uint64_t{1} << subsets;
  for (std::uint64_t family = 0; family < families; ++family) {
    if (!((family >> 0) & 1U) || !((family >> full) & 1U)) continue;
    bool ok = true;
    for (std::size_t u = 0; u < subsets && ok; ++u) {
      if (!((family >> u) & 1U)) continue;
      for (std::size_t v = u + 1; v < subsets; ++v) {
        if (!((family >> v) & 1U)) continue;
        if (!((family >> (u | v)) & 1U) || !((family >> (u & v)) & 1U)) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<PointSet> opens;
    for (std::size_t u = 0; u < subsets; ++u) {
      if ((family >> u) & 1U) opens.push_back(PointSet::from_mask(n, u));
    }
    visit(FiniteSpace::from_opens(numbered_points(n), opens));
  }
}

void enumerate_preorders(std::size_t n, const std::function<void(const FiniteSpace&)>& visit) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b) slots.emplace_back(a, b);
    }
  }
  const std::uint64_t relations = std::uint64_t{1} << slots.size();
  std::vector<std::uint64_t> up(n);
  for (std::uint64_t rel = 0; rel < relations; ++rel) {
    for (std::size_t a = 0; a < n; ++a) up[a] = std::uint64_t{1} << a;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((rel >> s) & 1U) up[slots[s].first] |= std::uint64_t{1} << slots[s].second;
    }
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (((up[a] >> b) & 1U) && (up[b] & ~up[a]) != 0) {
          transitive = false;
          break;
        }
      }
    }
    if (!transitive) continue;
    std::vector<PointSet> nbhd;
    for (std::size_t a = 0; a < n; ++a) nbhd.push_back(PointSet::from_mask(n, up[a]));
    visit(FiniteSpace::from_neighborhoods(numbered_points(n), std::move(nbhd)));
  }
}

}  // namespace

void for_each_topology(std::size_t n, const EnumerationOptions& options,
                       const std::function<void(const FiniteSpace&)>& visit) {
  if (n > options.max_points) {
    throw Error(ErrorKind::CapExceeded, "enumeration of topologies on " + std::to_string(n) +
                                            " points exceeds the cap of " +
                                            std::to_string(options.max_points));
  }
  if (options.strategy == EnumerationStrategy::Families) {
    if (n > 5) throw Error(ErrorKind::CapExceeded, "the family strategy supports at most 5 points");
    enumerate_families(n, visit);
  } else {
    if (n > 7) throw Error(ErrorKind::CapExceeded, "the preorder strategy supports at most 7 points");
    enumerate_preorders(n, visit);
  }
}

std::vector<FiniteSpace> enumerate_topologies(std::size_t n, const EnumerationOptions& options) {
  std::vector<FiniteSpace> out;
  for_each_topology(n, options, [&](const FiniteSpace& s) { out.push_back(s); });
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::string> numbered_points(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

FiniteSpace point_space() { return discrete_space(1); }

FiniteSpace discrete_space(std::size_t n) {
  std::vector<PointSet> nbhd;
  for (std::size_t i = 0; i < n; ++i) nbhd.push_back(PointSet::singleton(n, i));
  return FiniteSpace::from_neighborhoods(numbered_points(n), std::move(nbhd));
}

FiniteSpace indiscrete_space(std::size_t n) {
  return FiniteSpace::from_neighborhoods(numbered_points(n),
                                         std::vector<PointSet>(n, PointSet::full(n)));
}

FiniteSpace sierpinski_space() { return chain_space(2); }

FiniteSpace chain_space(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a + 1 < n; ++a) pairs.emplace_back(a, a + 1);
  return alexandroff_from_preorder(numbered_points(n), Preorder::closure_of(n, pairs));
}

}  // namespace topocat
