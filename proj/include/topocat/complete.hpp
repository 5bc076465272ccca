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
#include <string>
#include <vector>

#include "topocat/error.hpp"
#include "topocat/rel.hpp"
#include "topocat/relseq.hpp"
#include "topocat/report.hpp"
#include "topocat/rng.hpp"
#include "topocat/space.hpp"

namespace topocat {

/// A named subobject symbol. Boolean symbols record how they are built from
/// other symbols on the same object; `diamond` names the symbol standing
/// for the closure of this one.
struct Symbol {
  enum class Op { Atom, And, Or, Not };
  std::string name;
  std::size_t object = 0;
  std::optional<std::size_t> diamond;
  Op op = Op::Atom;
  std::vector<std::size_t> operands;
};

struct SiteMap {
  std::string name;
  std::size_t from = 0;
  std::size_t to = 0;
  PartialMap map;
};

struct SiteProduct {
  std::size_t object = 0;
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t left_projection = 0;   ///< index into Site::maps
  std::size_t right_projection = 0;  ///< index into Site::maps
};

/// Finite stand-in for a small modal category: named spaces, continuous
/// partial maps, declared binary products and subobject symbols.
class Site {
 public:
  std::size_t add_object(const std::string& name, FiniteSpace space);
  /// Throws InvalidModel unless the map is continuous on its domain.
  std::size_t add_map(const std::string& name, std::size_t from, std::size_t to, PartialMap map);
  /// Declares `name` = left x right with the canonical space and the
  /// projections "<name>.left" and "<name>.right".
  std::size_t add_product(const std::string& name, std::size_t left, std::size_t right);
  std::size_t add_symbol(Symbol symbol);

  std::size_t object_count() const { return objects_.size(); }
  const std::string& object_name(std::size_t i) const { return objects_.at(i).first; }
  const FiniteSpace& object_space(std::size_t i) const { return objects_.at(i).second; }
  const std::vector<SiteMap>& maps() const { return maps_; }
  const std::vector<SiteProduct>& products() const { return products_; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  /// The declared product whose object is `i`, if any.
  const SiteProduct* product_of(std::size_t i) const;

  std::optional<std::size_t> find_object(const std::string& name) const;
  std::optional<std::size_t> find_map(const std::string& name) const;
  std::optional<std::size_t> find_symbol(const std::string& name) const;

 private:
  std::vector<std::pair<std::string, FiniteSpace>> objects_;
  std::vector<SiteMap> maps_;
  std::vector<SiteProduct> products_;
  std::vector<Symbol> symbols_;
};

/// One stage M_i of a Boolean model: finite sets per object, a partial
/// function per site map and a subset per symbol.
struct ModelStage {
  std::vector<std::vector<std::string>> elements;         // per object
  std::vector<std::vector<std::optional<std::size_t>>> maps;  // per site map
  std::vector<PointSet> symbols;                           // per symbol
};

/// Stages, steps M_i(X) -> M_(i+1)(X) and base relations
/// R_i(X) inside M_i(X) x M_(i+1)(X).
struct Bundle {
  Site site;
  std::vector<ModelStage> stages;
  std::vector<std::vector<std::vector<std::size_t>>> steps;  // steps[i][object]
  std::vector<std::vector<BinaryRelation>> base;             // base[i][object]

  std::size_t depth() const { return stages.size(); }
};

/// Derives the stage data of each product object from its factors: elements
/// are the pairs "(a,b)" in row-major order, and projection actions, steps
/// and missing base relations follow from the factors.
/// Product objects must be declared after their factors.
void complete_products(Bundle& bundle);

/// Throws InvalidModel naming the first problem: shapes, map actions out
/// of range, Boolean symbols not matching their operands, M_i(phi) not
/// inside M_i(dia phi), steps that do not preserve and reflect symbols, or
/// map actions not natural in the steps.
void validate_bundle(const Bundle& bundle);

/// The first stages only.
Bundle truncate(const Bundle& bundle, std::size_t depth);

/// Base relations used by the fixpoint: the given ones, enlarged by the
/// step graphs and, on declared products, by the pairing of the factors.
std::vector<std::vector<BinaryRelation>> effective_base(const Bundle& bundle);

struct HypothesisWitness {
  std::size_t symbol = 0;
  std::size_t stage = 0;    ///< i, with the relation R_i into stage i + 1
  std::size_t element = 0;  ///< in R_i^-1 M_(i+1)(phi) but not in M_i(dia phi)
  std::string symbol_name;
  std::string element_name;
};

class HypothesisViolated : public Error {
 public:
  HypothesisViolated(const std::string& message, HypothesisWitness witness)
      : Error(ErrorKind::HypothesisViolated, message), witness_(witness) {}
  const HypothesisWitness& witness() const { return witness_; }

 private:
  HypothesisWitness witness_;
};

std::optional<HypothesisWitness> find_hypothesis_violation(const Bundle& bundle);

/// R-bar_ij(X) for i < j.
class RelFamily {
 public:
  RelFamily() = default;
  explicit RelFamily(const Bundle& bundle);

  std::size_t depth() const { return depth_; }
  const BinaryRelation& at(std::size_t object, std::size_t i, std::size_t j) const;
  BinaryRelation& at(std::size_t object, std::size_t i, std::size_t j);

  bool operator==(const RelFamily& other) const = default;
  bool is_subset_of(const RelFamily& other) const;

 private:
  std::size_t depth_ = 0;
  std::vector<std::vector<BinaryRelation>> rels_;  // rels_[object][i * depth + j]
};

struct TraceEntry {
  std::size_t object = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t x = 0;
  std::size_t y = 0;
  std::string rule;    ///< L1, L2, L3 or L4
  std::string detail;  ///< premises of the derivation
};

struct Closure {
  RelFamily family;
  std::vector<TraceEntry> trace;  ///< filled only when requested
};

/// Least family containing R_i in R-bar_(i,i+1) (L1) and closed under
/// composition (L2), the action of site maps (L3) and pairing into declared
/// products (L4). Validates the bundle, then throws HypothesisViolated when
/// some R_i^-1 M_(i+1)(phi) is not inside M_i(dia phi).
Closure close_relations(const Bundle& bundle, bool trace = false);

/// Laws L1, L2, L3, L4 checked directly on a family, independently of the
/// fixpoint.
Report validate_family(const Bundle& bundle, const RelFamily& family);

/// Law L5: R-bar_ij^-1 M_j(phi) inside M_i(dia phi) for every declared
/// diamond and i < j.
Report verify_l5(const Bundle& bundle, const RelFamily& family);

struct Assembly {
  std::vector<RelSeq> sequences;  ///< per object, with R-bar_ii = identity
  std::vector<Colimit> colimits;
  Report report;     ///< backward_inclusion, forward_inclusion, functor laws
  Json diagnostics;  ///< per symbol: inclusions and per-stage data
};

/// Builds each object's relational sequence and its colimit space, then
/// compares M(dia phi) with the closure of M(phi) on the last stage.
Assembly assemble_top_model(const Bundle& bundle, const RelFamily& family);

struct BundleGenOptions {
  std::size_t max_stages = 3;
  std::size_t max_objects = 3;
  std::size_t max_points = 3;
};

/// Canonical model of random finite spaces: M_i(X) = X, identity steps,
/// site maps acting as themselves, random atom symbols with their closures
/// as diamonds, and base relations drawn from { (x, y) | y in N(x) }. Such
/// bundles satisfy the hypothesis by construction.
Bundle random_bundle(Rng& rng, const BundleGenOptions& options = {});

/// Adds one base pair that breaks the hypothesis; nullopt when the bundle
/// offers no such pair.
std::optional<Bundle> break_hypothesis(Rng& rng, const Bundle& bundle);

}  // namespace topocat
