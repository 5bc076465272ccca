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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topocat/error.hpp"
#include "topocat/point_set.hpp"
#include "topocat/rel.hpp"
#include "topocat/report.hpp"
#include "topocat/rng.hpp"
#include "topocat/space.hpp"

namespace topocat {

// ---------------------------------------------------------------- signature

enum class FunctionKind { Total, Partial, Embedding };

std::string to_string(FunctionKind kind);
/// Accepts "total", "partial" and "embedding"; throws InvalidInput.
FunctionKind function_kind_from_string(const std::string& text);

struct FunctionSymbol {
  std::string name;
  std::vector<std::string> args;
  std::string result;
  FunctionKind kind = FunctionKind::Total;
};

struct PredicateSymbol {
  std::string name;
  std::vector<std::string> args;
};

class Signature {
 public:
  /// Each add throws InvalidInput on a duplicate name or an undeclared sort.
  void add_sort(const std::string& name);
  void add_function(FunctionSymbol f);
  void add_predicate(PredicateSymbol p);

  const std::vector<std::string>& sorts() const { return sorts_; }
  const std::vector<FunctionSymbol>& functions() const { return functions_; }
  const std::vector<PredicateSymbol>& predicates() const { return predicates_; }
  bool has_sort(const std::string& name) const;
  const FunctionSymbol* function(const std::string& name) const;
  const PredicateSymbol* predicate(const std::string& name) const;

 private:
  std::vector<std::string> sorts_;
  std::vector<FunctionSymbol> functions_;
  std::vector<PredicateSymbol> predicates_;
};

// ---------------------------------------------------------------- syntax

/// A variable (no arguments, `is_app` false) or a function application.
struct Term {
  std::string name;
  bool is_app = false;
  std::vector<Term> args;

  static Term var(std::string name) { return Term{std::move(name), false, {}}; }
  static Term app(std::string name, std::vector<Term> args) { return Term{std::move(name), true, std::move(args)}; }
  bool operator==(const Term& other) const = default;
};

enum class Modality { Dia, Box };

/// A predicate symbol under a prefix of modalities, outermost first:
/// `(dia box P)` is {"P", {Dia, Box}}.
struct PredExpr {
  std::string name;
  std::vector<Modality> mods;
  bool operator==(const PredExpr& other) const = default;
};

struct Formula {
  enum class Kind { Atom, Equal, True, False, And, Or, Not, Implies, Exists, Forall, Dia, Box };

  Kind kind = Kind::True;
  PredExpr pred;                ///< Atom
  std::vector<Term> terms;      ///< Atom arguments, or the two sides of Equal
  std::string var;              ///< Exists / Forall
  std::string sort;             ///< Exists / Forall
  std::vector<Formula> kids;    ///< one or two subformulas

  static Formula atom(PredExpr p, std::vector<Term> args);
  static Formula equal(Term a, Term b);
  static Formula truth();
  static Formula falsity();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula neg(Formula a);
  static Formula implies(Formula a, Formula b);
  static Formula exists(std::string var, std::string sort, Formula body);
  static Formula forall(std::string var, std::string sort, Formula body);
  static Formula dia(Formula a);
  static Formula box(Formula a);

  bool operator==(const Formula& other) const = default;
};

/// Throws SyntaxError with the byte offset of the offending token.
Formula parse_formula(const std::string& text);
/// "antecedent |- consequent".
std::pair<Formula, Formula> parse_sequent(const std::string& text);
/// Canonical text; parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f);
std::string print_term(const Term& t);

/// Ordered typed variables; later entries shadow earlier ones.
using Context = std::vector<std::pair<std::string, std::string>>;

/// Free variables with their sorts, in order of first occurrence. Throws
/// SortError naming the offending subterm on an unknown symbol, a wrong
/// arity, or a variable used at two sorts.
Context infer_context(const Signature& sig, const Formula& f);
/// Union of the inferred contexts, first formula first.
Context infer_context(const Signature& sig, const std::vector<Formula>& fs);

// ---------------------------------------------------------------- semantics

/// The product of the given spaces, folded to the left, so the first
/// component is the most significant digit of a point index. The empty
/// list gives the one-point space.
FiniteSpace product_of(const std::vector<FiniteSpace>& spaces);

/// Sorts as spaces, function symbols as continuous partial maps out of the
/// product of their argument sorts, predicates as subsets of that product.
class Interpretation {
 public:
  explicit Interpretation(Signature sig);

  /// Throws InvalidModel for an undeclared sort.
  void set_sort(const std::string& name, FiniteSpace space);
  /// Checks the map against the declared kind: continuous and total,
  /// continuous partial, or a unary embedding. An embedding adds the symbol
  /// "<name>_inv" for its partial inverse. Throws InvalidModel.
  void set_function(const std::string& name, PartialMap map);
  void set_predicate(const std::string& name, PointSet members);
  /// Throws InvalidModel when a declared symbol has no interpretation.
  void validate() const;

  const Signature& signature() const { return sig_; }
  const FiniteSpace& sort(const std::string& name) const;
  const PartialMap& function(const std::string& name) const;
  const PointSet& predicate(const std::string& name) const;
  FiniteSpace arg_space(const std::vector<std::string>& sorts) const { return space_of(sorts); }
  FiniteSpace context_space(const Context& ctx) const;

 private:
  FiniteSpace space_of(const std::vector<std::string>& sorts) const;

  Signature sig_;
  std::map<std::string, FiniteSpace> sorts_;
  std::map<std::string, PartialMap> functions_;
  std::map<std::string, PointSet> predicates_;
};

/// Subset of the context space. Throws UnboundVariable for a free variable
/// missing from the context and SortMismatch for ill-sorted use.
PointSet eval(const Interpretation& model, const Formula& f, const Context& ctx);

struct SequentResult {
  bool holds = true;
  /// Point names of a context tuple in the antecedent but not the
  /// consequent, one per context variable.
  std::optional<std::vector<std::pair<std::string, std::string>>> counterexample;
};
SequentResult check_sequent(const Interpretation& model, const Formula& antecedent, const Formula& consequent,
                            const Context& ctx);
/// Point names of each component of a context point.
std::vector<std::pair<std::string, std::string>> decode_point(const Interpretation& model, const Context& ctx,
                                                              std::size_t point);

// ---------------------------------------------------------------- generators

/// Sorts X, Y; total f : X -> Y, partial g : X, Y -> X, constant c : -> X,
/// embedding e : X -> X; predicates P(X), Q(Y), R(X, X).
Signature sample_signature();

/// Random well-sorted formula over `sig` whose free variables come from
/// `ctx`. Quantifiers introduce fresh variables.
Formula random_formula(Rng& rng, const Signature& sig, const Context& ctx, std::size_t depth);

/// Random model of sample_signature with sorts of at most `max_points`.
Interpretation random_model(Rng& rng, std::size_t max_points);

}  // namespace topocat
