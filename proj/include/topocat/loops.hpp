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
#include <memory>
#include <optional>
#include <vector>

#include "topocat/rel.hpp"
#include "topocat/report.hpp"
#include "topocat/rng.hpp"
#include "topocat/space.hpp"

namespace topocat {

/// A list of relations R_1, ..., R_n with R_k : X_k -> X_(k-1) and
/// X_0 = X_n = anchor. The contraction operator applies R_n first.
struct Loop {
  FiniteSpace anchor;
  std::vector<Relation> rels;

  std::size_t length() const { return rels.size(); }
  /// X_0, ..., X_n. Throws TypeMismatch when consecutive relations do not
  /// meet or the ends differ from the anchor.
  std::vector<FiniteSpace> stages() const;
};

/// Certificate that a loop is acceptable: a derivation in the rules
/// empty / identity insertion / concatenation / conjugation / product.
class LoopExpr {
 public:
  enum class Kind { Empty, InsertId, Concat, Conjugate, Product };

  static LoopExpr empty(FiniteSpace anchor);
  /// Inserts an identity on X_position, so position ranges over 0..length.
  static LoopExpr insert_id(LoopExpr inner, std::size_t position);
  /// Throws AnchorMismatch unless both sides share the anchor.
  static LoopExpr concat(LoopExpr left, LoopExpr right);
  /// f : X -> Y continuous, inner anchored at X; the result is anchored at Y.
  /// Throws NotContinuous or AnchorMismatch.
  static LoopExpr conjugate(PartialMap f, LoopExpr inner);
  /// Anchored at product(left anchor, right anchor); the shorter operand is
  /// padded with identities on its anchor at the end.
  static LoopExpr product(LoopExpr left, LoopExpr right);

  Kind kind() const;
  const FiniteSpace& anchor() const;
  std::size_t length() const;
  std::size_t depth() const;

  // Constructor data; each accessor is valid for the matching kind only.
  const LoopExpr& inner() const;
  const LoopExpr& left() const;
  const LoopExpr& right() const;
  std::size_t position() const;
  const PartialMap& map() const;

  /// Uses only total maps in its conjugations.
  bool total_only() const;

 private:
  struct Node;
  explicit LoopExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Loop realize(const LoopExpr& e);

/// cl R_1 cl R_2 ... cl R_n A, with the outermost closure optional.
PointSet lc_operator(const Loop& loop, const PointSet& a, bool leading_closure = true);

/// Law loop_contraction: lc_operator(A) inside cl A for every A of the
/// anchor. Exhaustive when 2^|anchor| fits the cap, otherwise exact through
/// the empty set and singletons (the operator preserves unions).
Report lc_check_raw(const Loop& loop, std::uint64_t cap = std::uint64_t{1} << 20);
Report lc_check(const LoopExpr& e, std::uint64_t cap = std::uint64_t{1} << 20);

/// Total maps G_k : X_k -> anchor with G_0 = G_n = id.
struct AuxSequence {
  FiniteSpace anchor;
  std::vector<TotalMap> maps;
};

/// Builds G_0..G_n by induction on the certificate. Throws
/// PartialMapPresent when a conjugation uses a properly partial map.
AuxSequence auxiliary_sequence(const LoopExpr& e);

/// Laws aux_endpoints (G_0 = G_n = id), aux_shape (G_k lives on X_k) and
/// aux_invariant (R_(k+1) followed by G_k inside G_(k+1)).
Report validate_aux(const Loop& loop, const AuxSequence& aux);

/// Replays the chain D_n = A, D_(k-1) = cl R_k D_k, Q_k = cl G_k D_k and
/// checks Q_0 = LC(A), Q_k inside Q_(k+1), Q_n = cl A. Returns the first
/// failing step as a law result.
LawResult replay_aux(const Loop& loop, const AuxSequence& aux, const PointSet& a);

/// Replays the chain for every subset of the anchor (subject to the cap);
/// passes iff every step holds everywhere.
LawResult replay_aux_all(const Loop& loop, const AuxSequence& aux,
                         std::uint64_t cap = std::uint64_t{1} << 20);

struct LoopGenOptions {
  std::size_t max_depth = 4;
  std::size_t max_points = 3;
  bool total_only = false;
  bool allow_products = true;
};

/// Random certificate. Base spaces are drawn uniformly from the topologies
/// on 1..max_points points; with probability 1/3 the anchor is a product of
/// two base spaces. Constructors are drawn with weights Empty 1,
/// InsertId 2, Concat 2, Conjugate 3, Product 2 (the last only on product
/// anchors); conjugating maps are random continuous partial maps from a
/// random base space.
LoopExpr random_loop_expr(Rng& rng, const LoopGenOptions& options = {});

/// Random raw loop of the given length with arbitrary relations, used to
/// search for LC failures of non-acceptable loops.
Loop random_raw_loop(Rng& rng, std::size_t length, std::size_t max_points = 3);

/// A uniformly chosen topology on between 1 and max_points points.
FiniteSpace random_space(Rng& rng, std::size_t max_points);

/// Random continuous partial map; constant maps are the fallback after a few
/// rejected draws. With `total` the domain is everything.
PartialMap random_continuous_map(Rng& rng, const FiniteSpace& source, const FiniteSpace& target,
                                 bool total);

}  // namespace topocat
