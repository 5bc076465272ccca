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
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topocat/point_set.hpp"

namespace topocat {

/// A finite topological space.
///
/// Every finite space is Alexandroff, so the topology is held as the family
/// of minimal open neighbourhoods: `neighborhood(x)` is the intersection of
/// all opens containing x. A set is open iff it contains the neighbourhood
/// of each of its points, and x lies in the closure of A iff its
/// neighbourhood meets A. The full open family is materialised on demand by
/// `opens()`.
///
/// Values are immutable and share their storage, so copies are cheap.
class FiniteSpace {
 public:
  /// The empty space.
  FiniteSpace();

  /// Validates that `opens` contains the empty and the full set and is
  /// closed under binary union and intersection. Throws NotATopology with
  /// the offending pair otherwise. Point names must be distinct.
  static FiniteSpace from_opens(std::vector<std::string> points, const std::vector<PointSet>& opens);

  /// Smallest topology containing every set of `subbasis`.
  static FiniteSpace from_subbasis(std::vector<std::string> points,
                                   const std::vector<PointSet>& subbasis);

  /// Builds a space from its minimal neighbourhoods. Throws NotATopology
  /// unless x is in N(x) and y in N(x) implies N(y) is a subset of N(x).
  static FiniteSpace from_neighborhoods(std::vector<std::string> points,
                                        std::vector<PointSet> neighborhoods);

  std::size_t size() const;
  const std::vector<std::string>& points() const;
  const std::string& name(std::size_t i) const;
  std::optional<std::size_t> index_of(const std::string& name) const;

  const PointSet& neighborhood(std::size_t x) const;

  PointSet empty_set() const { return PointSet(size()); }
  PointSet full_set() const { return PointSet::full(size()); }

  PointSet closure(const PointSet& a) const;
  PointSet interior(const PointSet& a) const;
  bool is_open(const PointSet& a) const;
  bool is_closed(const PointSet& a) const;

  /// All open sets in canonical order (cardinality, then lexicographic).
  /// Throws SizeCap when more than `cap` opens exist.
  std::vector<PointSet> opens(std::size_t cap = std::size_t{1} << 20) const;

  /// Same points (with names) and same topology.
  bool operator==(const FiniteSpace& other) const;
  /// Same number of points and same topology on indices, ignoring names.
  bool same_topology(const FiniteSpace& other) const;

 private:
  struct Impl;
  explicit FiniteSpace(std::shared_ptr<const Impl> impl);
  void require_member(const PointSet& a) const;

  std::shared_ptr<const Impl> impl_;
};

/// A total function between the point sets of two spaces. Continuity is a
/// checked property, not an invariant.
class TotalMap {
 public:
  TotalMap() = default;
  /// Throws InvalidInput unless `values` assigns an in-range target point
  /// to every source point.
  TotalMap(FiniteSpace source, FiniteSpace target, std::vector<std::size_t> values);

  static TotalMap identity(const FiniteSpace& space);
  static TotalMap constant(const FiniteSpace& source, const FiniteSpace& target, std::size_t value);

  const FiniteSpace& source() const { return source_; }
  const FiniteSpace& target() const { return target_; }
  const std::vector<std::size_t>& values() const { return values_; }
  std::size_t operator()(std::size_t x) const { return values_[x]; }

  PointSet image(const PointSet& a) const;
  PointSet preimage(const PointSet& b) const;
  bool is_injective() const;
  bool is_surjective() const;

  bool operator==(const TotalMap& other) const = default;

 private:
  FiniteSpace source_;
  FiniteSpace target_;
  std::vector<std::size_t> values_;
};

/// `first` followed by `second`; throws SpaceMismatch if they do not meet.
TotalMap then(const TotalMap& first, const TotalMap& second);

/// Index of the pair (x, y) in the row-major enumeration of X x Y.
inline std::size_t pair_index(std::size_t x, std::size_t y, std::size_t right_size) {
  return x * right_size + y;
}

struct ProductSpace {
  FiniteSpace space;
  TotalMap left;   ///< projection onto the left factor
  TotalMap right;  ///< projection onto the right factor
};

/// Product topology; points are pairs "(x,y)" in row-major order.
ProductSpace product(const FiniteSpace& x, const FiniteSpace& y);

/// The rectangle A x B inside product(X, Y).
PointSet rectangle(const PointSet& a, const PointSet& b);

struct Subspace {
  FiniteSpace space;
  TotalMap inclusion;
};

/// Subspace topology on A (opens are traces U n A); points keep their names.
Subspace subspace(const FiniteSpace& x, const PointSet& a);

/// Returns an open set of the target whose preimage is not open, or nullopt
/// when the map is continuous.
std::optional<PointSet> continuity_witness(const TotalMap& f);
bool is_continuous(const TotalMap& f);

struct Factorization {
  TotalMap surjection;  ///< onto the image, with the subspace topology
  TotalMap embedding;   ///< the image inclusion
};

/// Surjection/embedding factorisation of a continuous map. Throws
/// NotContinuous.
Factorization factorize(const TotalMap& f);

/// Injective and the source carries the initial topology along f. Throws
/// NotContinuous.
bool is_embedding(const TotalMap& f);

/// Continuous bijection with continuous inverse.
bool is_homeomorphism(const TotalMap& f);

/// True iff the diagonal of X x X is closed.
bool is_hausdorff(const FiniteSpace& x);

/// A reflexive, transitive relation on [0, n); `up(x)` is { y | x <= y }.
class Preorder {
 public:
  Preorder() = default;
  /// Throws NotAPreorder (with the failing pair or triple) unless the
  /// relation is reflexive and transitive.
  static Preorder from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  /// Reflexive-transitive closure of an arbitrary relation.
  static Preorder closure_of(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  static Preorder discrete(std::size_t n);

  std::size_t size() const { return up_.size(); }
  bool leq(std::size_t x, std::size_t y) const { return up_[x].test(y); }
  const PointSet& up(std::size_t x) const { return up_[x]; }
  PointSet down(std::size_t x) const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  bool operator==(const Preorder& other) const = default;

 private:
  std::vector<PointSet> up_;
};

/// Opens are the up-sets of the preorder.
FiniteSpace alexandroff_from_preorder(std::vector<std::string> points, const Preorder& order);

/// x <= y iff x lies in the closure of {y}.
Preorder specialization_preorder(const FiniteSpace& x);

enum class EnumerationStrategy {
  Families,   ///< test every family of subsets of an n-point set
  Preorders,  ///< enumerate preorders and take their Alexandroff spaces
};

struct EnumerationOptions {
  EnumerationStrategy strategy = EnumerationStrategy::Families;
  /// Largest n accepted; n above it throws CapExceeded.
  std::size_t max_points = 4;
};

/// Visits every topology on the points "0".."n-1" exactly once, in a
/// deterministic order (increasing family mask, resp. increasing relation
/// mask for the preorder strategy).
void for_each_topology(std::size_t n, const EnumerationOptions& options,
                       const std::function<void(const FiniteSpace&)>& visit);
std::vector<FiniteSpace> enumerate_topologies(std::size_t n, const EnumerationOptions& options = {});

// Named spaces used throughout the tests and the CLI.
FiniteSpace point_space();
FiniteSpace discrete_space(std::size_t n);
FiniteSpace indiscrete_space(std::size_t n);
/// Points "0","1"; opens {}, {1}, {0,1}.
FiniteSpace sierpinski_space();
/// Points "0".."n-1" ordered 0 <= 1 <= ...; opens are the up-sets, so the
/// closure of a set is its down-closure.
FiniteSpace chain_space(std::size_t n);

std::vector<std::string> numbered_points(std::size_t n);

}  // namespace topocat
