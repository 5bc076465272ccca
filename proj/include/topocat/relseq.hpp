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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topocat/rel.hpp"
#include "topocat/report.hpp"
#include "topocat/rng.hpp"
#include "topocat/space.hpp"

namespace topocat {

/// Finite truncation of a relational sequence: stages X_0..X_(n-1) (plain
/// point lists), step functions X_i -> X_(i+1), and relations R_ij for
/// every i <= j. Indices are 0-based throughout.
class RelSeq {
 public:
  RelSeq() = default;
  /// Checks shapes only (sizes and ranges); the sequence laws are checked
  /// by validate(). Missing relations start empty.
  RelSeq(std::vector<std::vector<std::string>> stages, std::vector<std::vector<std::size_t>> steps);

  std::size_t depth() const { return stages_.size(); }
  const std::vector<std::string>& stage(std::size_t i) const { return stages_.at(i); }
  const std::vector<std::vector<std::string>>& stages() const { return stages_; }
  const std::vector<std::size_t>& step(std::size_t i) const { return steps_.at(i); }
  const std::vector<std::vector<std::size_t>>& steps() const { return steps_; }

  const BinaryRelation& rel(std::size_t i, std::size_t j) const;
  /// Replaces R_ij; throws InvalidInput on a shape mismatch or i > j.
  void set_rel(std::size_t i, std::size_t j, BinaryRelation r);

  /// The composite step map X_i -> X_j (identity when i = j).
  std::vector<std::size_t> composite(std::size_t i, std::size_t j) const;

  bool operator==(const RelSeq& other) const = default;

 private:
  std::vector<std::vector<std::string>> stages_;
  std::vector<std::vector<std::size_t>> steps_;
  std::vector<std::vector<BinaryRelation>> rels_;  // rels_[i][j - i]
};

/// Sets R_ij = P_i C_i P_(i+1) ... C_(j-1) P_j, where each C_i is first
/// enlarged by the graph of step i and each P_i (identity when absent) is a
/// within-stage preorder. The result is then validated; throws
/// InvalidSequence with the failing law otherwise.
RelSeq from_consecutive(std::vector<std::vector<std::string>> stages,
                        std::vector<std::vector<std::size_t>> steps,
                        std::vector<BinaryRelation> consecutive,
                        std::vector<std::optional<Preorder>> within = {});

/// Laws step_graphs (R_ij contains the graph of the composite step) and
/// composition (R_ij R_jk inside R_ik), for all i <= j <= k.
Report validate(const RelSeq& s);

/// X_i = points, identity steps, every R_ij equal to the order.
RelSeq from_poset(const std::vector<std::string>& points, const Preorder& order, std::size_t depth);

/// Exact non-negative rational.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  /// "p/q", "p" or a plain integer; throws BadMetric on malformed text.
  static Rational parse(const std::string& text);
  std::string to_string() const;
  friend bool operator<=(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b);
};

/// x R_ij y iff d(x, y) <= 1/i - 1/j with stage numbers i, j counted from 1.
/// Throws BadMetric unless d is a square, symmetric, non-negative matrix
/// with zero diagonal satisfying the triangle inequality.
RelSeq from_metric(const std::vector<std::string>& points,
                   const std::vector<std::vector<Rational>>& distance, std::size_t depth);

struct Colimit {
  FiniteSpace space;  ///< on the last stage
  /// class_maps[i][p] = [p], the image of p in the last stage.
  std::vector<std::vector<std::size_t>> class_maps;
  /// basic[i][p] = I_p = { [q] | p R_ij q, j >= i }.
  std::vector<std::vector<PointSet>> basic;
};

/// Throws InvalidSequence when validate() fails or the sequence is empty.
Colimit colimit(const RelSeq& s);

/// Stages X_i x Y_i (points "(a,b)"), product steps, relations R_ij x S_ij.
/// Throws DepthMismatch.
RelSeq seq_product(const RelSeq& s, const RelSeq& t);

/// The first `depth` stages.
RelSeq truncate(const RelSeq& s, std::size_t depth);

/// Per-stage functions f_i : X_i -> Y_i.
struct SeqMorphism {
  std::vector<std::vector<std::size_t>> maps;
};

/// Laws morphism_shape, naturality and relation_preservation.
Report validate_morphism(const RelSeq& s, const RelSeq& t, const SeqMorphism& m);

/// Pointwise injective and x R_ij y iff f x S_ij f y.
bool is_embedding_morphism(const RelSeq& s, const RelSeq& t, const SeqMorphism& m);

/// [x] |-> [f x] between the colimits.
TotalMap colimit_map(const Colimit& cs, const Colimit& ct, const SeqMorphism& m);

/// Laws basis_contains_point, basis_filtered, basis_neighbourhood,
/// basic_open and basic_antitone (p R q implies I_q inside I_p).
Report check_basis(const RelSeq& s);

/// Laws colimit_continuous and embedding_preserved for an embedding m.
Report check_embedding_preservation(const RelSeq& s, const RelSeq& t, const SeqMorphism& m);

/// Laws basic_rectangles (I_(p,q) = I_p x I_q) and product_homeomorphism.
Report check_product_preservation(const RelSeq& s, const RelSeq& t);

/// Restriction of s to the stagewise agreement sets of f and g.
struct SeqEqualizer {
  RelSeq seq;
  SeqMorphism inclusion;
};
SeqEqualizer seq_equalizer(const RelSeq& s, const RelSeq& t, const SeqMorphism& f,
                           const SeqMorphism& g);

/// Laws equalizer_image (the colimit of the equalizer lands exactly on the
/// agreement set of c(f), c(g)) and equalizer_embedding.
Report check_equalizer_preservation(const RelSeq& s, const RelSeq& t, const SeqMorphism& f,
                                    const SeqMorphism& g);

/// Whether the colimit at depth n agrees with the one at depth n - 1, which
/// is only meaningful when the last step is a bijection. Reported, not
/// decided: {"depth", "last_step_bijective", "stable"}.
Json stabilization(const RelSeq& s);

struct RelSeqGenOptions {
  std::size_t max_points = 4;
  std::size_t max_depth = 4;
};

/// Random valid sequence built with from_consecutive: random steps, each
/// C_i the step graph plus pairs drawn with probability 1/4, each P_i the
/// preorder generated by pairs drawn with probability 1/5.
RelSeq random_relseq(Rng& rng, const RelSeqGenOptions& options = {});
/// Same, with a prescribed depth.
RelSeq random_relseq(Rng& rng, std::size_t depth, std::size_t max_points);

/// A random sub-sequence of t (stages closed under the steps, relations
/// restricted) together with its inclusion, an embedding by construction.
SeqEqualizer random_subsequence(Rng& rng, const RelSeq& t);

/// Constant-stage target with identity steps and full relations.
RelSeq constant_full_seq(const std::vector<std::string>& points, std::size_t depth);

/// f_i = f_last o (composite step i -> last) for a function on the last stage.
SeqMorphism morphism_from_last(const RelSeq& s, const std::vector<std::size_t>& last);

}  // namespace topocat
