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
#include <string>
#include <vector>

#include "topocat/point_set.hpp"
#include "topocat/rel.hpp"
#include "topocat/report.hpp"
#include "topocat/space.hpp"

namespace topocat {

/// An object (X, phi) of the syntactic category: a predicate on a space.
struct SyntObj {
  FiniteSpace space;
  PointSet pred;

  /// Throws InvalidInput unless `pred` lives in `space`.
  static SyntObj make(FiniteSpace space, PointSet pred);
  static SyntObj whole(const FiniteSpace& space) { return {space, space.full_set()}; }

  bool operator==(const SyntObj& other) const = default;
};

/// A continuous partial map with domain exactly from.pred and image inside
/// to.pred.
struct SyntMap {
  SyntObj from;
  SyntObj to;
  PartialMap pm;

  /// Validates the invariants. Throws SpaceMismatch when pm does not live
  /// between the underlying spaces, InvalidInput for a wrong domain or
  /// image, NotContinuous when pm is not continuous on its domain.
  static SyntMap make(SyntObj from, SyntObj to, PartialMap pm);

  bool operator==(const SyntMap& other) const = default;
};

SyntMap identity(const SyntObj& o);
/// f followed by g. Throws TypeMismatch unless f.to == g.from.
SyntMap compose(const SyntMap& f, const SyntMap& g);

struct SyntProduct {
  SyntObj object;  ///< (X x Y, phi x psi)
  SyntMap left;
  SyntMap right;
};
SyntProduct product_obj(const SyntObj& a, const SyntObj& b);
/// The unique map into the product with the given components. Throws
/// TypeMismatch unless both maps start at the same object.
SyntMap pairing(const SyntProduct& p, const SyntMap& f, const SyntMap& g);

struct SyntEqualizer {
  SyntObj object;     ///< (X, { x in phi | f x = g x })
  SyntMap inclusion;  ///< restriction of the identity
};
/// Throws TypeMismatch unless f and g are parallel.
SyntEqualizer equalizer_obj(const SyntMap& f, const SyntMap& g);

struct SyntFactorization {
  SyntMap surjection;  ///< onto (Y, im f), same graph as f
  SyntMap inclusion;   ///< (Y, im f) into (Y, psi), a restricted identity
};
SyntFactorization factorize_cont(const SyntMap& f);

/// Surjective onto to.pred.
bool is_e_map(const SyntMap& f);
/// Isomorphic to a restriction of the identity: injective, and the inverse
/// on the image is again a continuous partial map.
bool is_m_map(const SyntMap& f);

/// Every subset of o.pred, in mask order.
std::vector<PointSet> sub_lattice(const SyntObj& o);
/// phi n cl psi. Throws NotASubpredicate unless psi is inside o.pred.
PointSet rel_diamond(const SyntObj& o, const PointSet& psi);
/// phi minus the relative diamond of phi minus psi.
PointSet rel_box(const SyntObj& o, const PointSet& psi);

struct SyntUniverse {
  std::vector<SyntObj> objects;
  std::vector<SyntMap> maps;
};

/// Every predicate on each space as an object and every continuous partial
/// map between them as a morphism.
SyntUniverse exhaustive_universe(const std::vector<FiniteSpace>& spaces);

/// Laws: factorization, orthogonality, e_pullback_stable,
/// regular_monos_in_m, relative_s4, lax_preimage, relative_pi,
/// relative_lc, subobject_lattice. Objects used by maps but missing from
/// the object list are added.
Report check_synt_axioms(const SyntUniverse& universe);

}  // namespace topocat
