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


#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "topocat/point_set.hpp"
#include "topocat/space.hpp"

namespace topocat {

/// A relation between two plain index ranges, stored as one row per source
/// element (the set of related targets).
class BinaryRelation {
 public:
  BinaryRelation() = default;
  BinaryRelation(std::size_t source_size, std::size_t target_size);

  static BinaryRelation identity(std::size_t n);
  static BinaryRelation full(std::size_t source_size, std::size_t target_size);
  static BinaryRelation from_pairs(std::size_t source_size, std::size_t target_size,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  static BinaryRelation graph_of(std::size_t target_size, const std::vector<std::size_t>& values);

  std::size_t source_size() const { return rows_.size(); }
  std::size_t target_size() const { return target_size_; }

  bool contains(std::size_t x, std::size_t y) const { return rows_[x].test(y); }
  void insert(std::size_t x, std::size_t y) { rows_[x].set(y); }
  const PointSet& row(std::size_t x) const { return rows_[x]; }

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  /// Source elements related to something.
  PointSet domain() const;
  bool is_functional() const;
  bool is_subset_of(const BinaryRelation& other) const;

  BinaryRelation& operator|=(const BinaryRelation& other);
  bool operator==(const BinaryRelation& other) const = default;

  PointSet image(const PointSet& a) const;
  PointSet preimage(const PointSet& b) const;

  /// `*this` followed by `next`.
  BinaryRelation then(const BinaryRelation& next) const;
  BinaryRelation converse() const;

 private:
  void require_shape(const BinaryRelation& other) const;

  std::size_t target_size_ = 0;
  std::vector<PointSet> rows_;
};

/// A relation R between the point sets of two spaces.
class Relation {
 public:
  Relation() = default;
  /// Throws InvalidInput when the shape of `rel` differs from the spaces.
  Relation(FiniteSpace source, FiniteSpace target, BinaryRelation rel);

  static Relation empty(const FiniteSpace& source, const FiniteSpace& target);
  static Relation identity(const FiniteSpace& space);
  static Relation from_pairs(const FiniteSpace& source, const FiniteSpace& target,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  const FiniteSpace& source() const { return source_; }
  const FiniteSpace& target() const { return target_; }
  const BinaryRelation& rel() const { return rel_; }

  bool contains(std::size_t x, std::size_t y) const { return rel_.contains(x, y); }
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const { return rel_.pairs(); }
  std::size_t size() const { return rel_.size(); }
  bool is_functional() const { return rel_.is_functional(); }

  bool operator==(const Relation& other) const = default;

 private:
  FiniteSpace source_;
  FiniteSpace target_;
  BinaryRelation rel_;
};

/// R followed by S. Throws SpaceMismatch unless R's target is S's source.
Relation compose(const Relation& r, const Relation& s);
Relation converse(const Relation& r);
/// { y | exists x in A with (x, y) in R }. Throws SpaceMismatch.
PointSet image(const Relation& r, const PointSet& a);
PointSet preimage(const Relation& r, const PointSet& b);
bool is_subrelation(const Relation& r, const Relation& s);

/// A functional relation: every source point has at most one value.
class PartialMap {
 public:
  PartialMap() = default;
  /// `values[x]` is the image of x, or nullopt outside the domain.
  PartialMap(FiniteSpace source, FiniteSpace target, std::vector<std::optional<std::size_t>> values);

  /// Throws NotFunctional naming the first source point with two values.
  static PartialMap from_relation(const Relation& r);
  static PartialMap from_total(const TotalMap& f);
  static PartialMap partial_identity(const FiniteSpace& space, const PointSet& domain);
  static PartialMap empty(const FiniteSpace& source, const FiniteSpace& target);

  const FiniteSpace& source() const { return source_; }
  const FiniteSpace& target() const { return target_; }
  const std::vector<std::optional<std::size_t>>& values() const { return values_; }
  std::optional<std::size_t> operator()(std::size_t x) const { return values_[x]; }

  PointSet domain() const;
  PointSet range() const { return image(domain()); }
  bool is_total() const;
  /// Throws NotFunctional when some point lies outside the domain.
  TotalMap to_total() const;

  /// Direct image: f A = t_f(A n dom f).
  PointSet image(const PointSet& a) const;
  /// Inverse image, a subset of dom f.
  PointSet preimage(const PointSet& b) const;

  /// The same map with domain cut down to dom f n a.
  PartialMap restrict_to(const PointSet& a) const;

  bool operator==(const PartialMap& other) const = default;

 private:
  FiniteSpace source_;
  FiniteSpace target_;
  std::vector<std::optional<std::size_t>> values_;
};

Relation graph(const TotalMap& f);
Relation graph(const PartialMap& f);

/// f followed by g, as partial maps.
PartialMap then(const PartialMap& f, const PartialMap& g);

struct PartialImages {
  PointSet direct;   ///< f A, computed on A n dom f
  PointSet inverse;  ///< f^-1 B, a subset of dom f
};
PartialImages pm_images(const PartialMap& f, const PointSet& a, const PointSet& b);

/// The corestricted total map t_f from the subspace dom f to the target.
struct DomainMap {
  Subspace domain;
  TotalMap map;
};
DomainMap domain_map(const PartialMap& f);

/// R x S between product(X, Y) and product(X', Y'), in the row-major
/// pairing of `product`.
Relation product_rel(const Relation& r, const Relation& s);

/// Partial-map continuity, defined as continuity of t_f on the subspace dom f.
bool is_continuous_partial(const PartialMap& f);

/// First A (in mask order) of the target with f(cl(f^-1 A)) not inside cl A,
/// or nullopt. Agrees with is_continuous_partial; kept as a separate route.
std::optional<PointSet> partial_continuity_witness(const PartialMap& f);

/// First A with R(cl(R^-1 A)) not inside cl A, or nullopt.
std::optional<PointSet> relation_continuity_witness(const Relation& r);
bool is_continuous_relation(const Relation& r);

/// x |-> (x, f x) from the subspace dom f into product(source, target).
TotalMap graph_embedding(const PartialMap& f);

}  // namespace topocat
