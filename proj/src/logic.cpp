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


#include "topocat/logic.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "topocat/error.hpp"
#include "topocat/loops.hpp"

namespace topocat {

std::string to_string(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::Total: return "total";
    case FunctionKind::Partial: return "partial";
    case FunctionKind::Embedding: return "embedding";
  }
  return "total";
}

FunctionKind function_kind_from_string(const std::string& text) {
  if (text == "total") return FunctionKind::Total;
  if (text == "partial") return FunctionKind::Partial;
  if (text == "embedding") return FunctionKind::Embedding;
  throw Error(ErrorKind::InvalidInput, "unknown function kind '" + text + "'");
}

// ---------------------------------------------------------------- signature

void Signature::add_sort(const std::string& name) {
  if (has_sort(name)) throw Error(ErrorKind::InvalidInput, "duplicate sort '" + name + "'");
  sorts_.push_back(name);
}

void Signature::add_function(FunctionSymbol f) {
  if (function(f.name) || predicate(f.name)) throw Error(ErrorKind::InvalidInput, "duplicate symbol '" + f.name + "'");
  for (const auto& s : f.args) {
    if (!has_sort(s)) throw Error(ErrorKind::InvalidInput, "function '" + f.name + "' uses undeclared sort '" + s + "'");
  }
  if (!has_sort(f.result)) {
    throw Error(ErrorKind::InvalidInput, "function '" + f.name + "' uses undeclared sort '" + f.result + "'");
  }
  functions_.push_back(std::move(f));
}

void Signature::add_predicate(PredicateSymbol p) {
  if (function(p.name) || predicate(p.name)) throw Error(ErrorKind::InvalidInput, "duplicate symbol '" + p.name + "'");
  for (const auto& s : p.args) {
    if (!has_sort(s)) throw Error(ErrorKind::InvalidInput, "predicate '" + p.name + "' uses undeclared sort '" + s + "'");
  }
  predicates_.push_back(std::move(p));
}

bool Signature::has_sort(const std::string& name) const {
  return std::find(sorts_.begin(), sorts_.end(), name) != sorts_.end();
}

const FunctionSymbol* Signature::function(const std::string& name) const {
  for (const auto& f : functions_) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const PredicateSymbol* Signature::predicate(const std::string& name) const {
  for (const auto& p : predicates_) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

// ---------------------------------------------------------------- AST helpers

Formula Formula::atom(PredExpr p, std::vector<Term> args) {
  Formula f;
  f.kind = Kind::Atom;
  f.pred = std::move(p);
  f.terms = std::move(args);
  return f;
}

Formula Formula::equal(Term a, Term b) {
  Formula f;
  f.kind = Kind::Equal;
  f.terms = {std::move(a), std::move(b)};
  return f;
}

Formula Formula::truth() { return Formula{}; }

Formula Formula::falsity() {
  Formula f;
  f.kind = Kind::False;
  return f;
}

namespace {

Formula node(Formula::Kind kind, std::vector<Formula> kids) {
  Formula f;
  f.kind = kind;
  f.kids = std::move(kids);
  return f;
}

Formula quantifier(Formula::Kind kind, std::string var, std::string sort, Formula body) {
  Formula f = node(kind, {std::move(body)});
  f.var = std::move(var);
  f.sort = std::move(sort);
  return f;
}

}  // namespace

Formula Formula::conj(Formula a, Formula b) { return node(Kind::And, {std::move(a), std::move(b)}); }
Formula Formula::disj(Formula a, Formula b) { return node(Kind::Or, {std::move(a), std::move(b)}); }
Formula Formula::neg(Formula a) { return node(Kind::Not, {std::move(a)}); }
Formula Formula::implies(Formula a, Formula b) { return node(Kind::Implies, {std::move(a), std::move(b)}); }
Formula Formula::dia(Formula a) { return node(Kind::Dia, {std::move(a)}); }
Formula Formula::box(Formula a) { return node(Kind::Box, {std::move(a)}); }
Formula Formula::exists(std::string var, std::string sort, Formula body) {
  return quantifier(Kind::Exists, std::move(var), std::move(sort), std::move(body));
}
Formula Formula::forall(std::string var, std::string sort, Formula body) {
  return quantifier(Kind::Forall, std::move(var), std::move(sort), std::move(body));
}

// ---------------------------------------------------------------- parser

namespace {

enum class Tok { Ident, LParen, RParen, Comma, Colon, Dot, Amp, Bar, Tilde, Arrow, Eq, Turnstile, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool is_keyword(const std::string& s) {
  return s == "dia" || s == "box" || s == "exists" || s == "forall" || s == "true" || s == "false";
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      const std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      out.push_back({Tok::Ident, text.substr(start, i - start), start});
      continue;
    }
    auto two = [&](const char* s) { return text.compare(i, 2, s) == 0; };
    if (two("->")) {
      out.push_back({Tok::Arrow, "->", i});
      i += 2;
      continue;
    }
    if (two("|-")) {
      out.push_back({Tok::Turnstile, "|-", i});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case ':': kind = Tok::Colon; break;
      case '.': kind = Tok::Dot; break;
      case '&': kind = Tok::Amp; break;
      case '|': kind = Tok::Bar; break;
      case '~': kind = Tok::Tilde; break;
      case '=': kind = Tok::Eq; break;
      default: throw SyntaxError(i, std::string("unexpected character '") + text[i] + "'");
    }
    out.push_back({kind, std::string(1, text[i]), i});
    ++i;
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  Formula formula() { return implies(); }

  void expect_end() {
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    ++pos_;
  }

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw SyntaxError(t.pos, msg + (t.kind == Tok::End ? " at end of input" : ""));
  }

  bool at_keyword(const char* kw) const { return peek().kind == Tok::Ident && peek().text == kw; }

  std::string name(const char* what) {
    if (peek().kind != Tok::Ident || is_keyword(peek().text)) fail(std::string("expected ") + what);
    return toks_[pos_++].text;
  }

  Formula implies() {
    Formula left = disjunction();
    if (peek().kind == Tok::Arrow) {
      ++pos_;
      return Formula::implies(std::move(left), implies());
    }
    return left;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().kind == Tok::Bar) {
      ++pos_;
      f = Formula::disj(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (peek().kind == Tok::Amp) {
      ++pos_;
      f = Formula::conj(std::move(f), unary());
    }
    return f;
  }

  bool starts_unary(std::size_t ahead) const {
    const Tok k = peek(ahead).kind;
    return k == Tok::Tilde || k == Tok::Ident || k == Tok::LParen;
  }

  Formula unary() {
    if (peek().kind == Tok::Tilde) {
      ++pos_;
      return Formula::neg(unary());
    }
    if (at_keyword("dia") || at_keyword("box")) {
      const Token mod = toks_[pos_++];
      if (!starts_unary(0)) throw SyntaxError(mod.pos, "dangling modality '" + mod.text + "'");
      return mod.text == "dia" ? Formula::dia(unary()) : Formula::box(unary());
    }
    if (at_keyword("exists") || at_keyword("forall")) {
      const bool ex = peek().text == "exists";
      ++pos_;
      std::string var = name("a variable");
      expect(Tok::Colon, "':'");
      std::string sort = name("a sort");
      expect(Tok::Dot, "'.'");
      Formula body = implies();
      return ex ? Formula::exists(std::move(var), std::move(sort), std::move(body))
                : Formula::forall(std::move(var), std::move(sort), std::move(body));
    }
    return atom();
  }

  PredExpr pred_expr() {
    if (at_keyword("dia") || at_keyword("box")) {
      const Modality m = peek().text == "dia" ? Modality::Dia : Modality::Box;
      ++pos_;
      PredExpr inner = pred_expr();
      inner.mods.insert(inner.mods.begin(), m);
      return inner;
    }
    if (peek().kind == Tok::LParen) {
      ++pos_;
      PredExpr inner = pred_expr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    return PredExpr{name("a predicate"), {}};
  }

  std::vector<Term> args() {
    expect(Tok::LParen, "'('");
    std::vector<Term> out;
    if (peek().kind != Tok::RParen) {
      out.push_back(term());
      while (peek().kind == Tok::Comma) {
        ++pos_;
        out.push_back(term());
      }
    }
    expect(Tok::RParen, "')' or ','");
    return out;
  }

  Term term() {
    std::string n = name("a term");
    if (peek().kind == Tok::LParen) return Term::app(std::move(n), args());
    return Term::var(std::move(n));
  }

  Formula atom() {
    if (at_keyword("true")) {
      ++pos_;
      return Formula::truth();
    }
    if (at_keyword("false")) {
      ++pos_;
      return Formula::falsity();
    }
    if (peek().kind == Tok::LParen) {
      // "(dia P)(x)" applies a modalized predicate; otherwise a grouped formula.
      const std::size_t save = pos_;
      try {
        ++pos_;
        PredExpr p = pred_expr();
        expect(Tok::RParen, "')'");
        if (peek().kind == Tok::LParen) return Formula::atom(std::move(p), args());
      } catch (const SyntaxError&) {
      }
      pos_ = save + 1;
      Formula inner = implies();
      expect(Tok::RParen, "')'");
      return inner;
    }
    std::string n = name("a formula");
    if (peek().kind == Tok::LParen) {
      std::vector<Term> a = args();
      if (peek().kind == Tok::Eq) {
        ++pos_;
        return Formula::equal(Term::app(std::move(n), std::move(a)), term());
      }
      return Formula::atom(PredExpr{std::move(n), {}}, std::move(a));
    }
    if (peek().kind == Tok::Eq) {
      ++pos_;
      return Formula::equal(Term::var(std::move(n)), term());
    }
    fail("expected '(' or '=' after '" + n + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(const std::string& text) {
  Parser p(text);
  Formula f = p.formula();
  p.expect_end();
  return f;
}

std::pair<Formula, Formula> parse_sequent(const std::string& text) {
  Parser p(text);
  Formula a = p.formula();
  p.expect(Tok::Turnstile, "'|-'");
  Formula b = p.formula();
  p.expect_end();
  return {std::move(a), std::move(b)};
}

// ---------------------------------------------------------------- printer

std::string print_term(const Term& t) {
  if (!t.is_app) return t.name;
  std::string out = t.name + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ",";
    out += print_term(t.args[i]);
  }
  return out + ")";
}

namespace {

std::string print_at(const Formula& f, int ctx) {
  using K = Formula::Kind;
  auto wrap = [](bool w, std::string s) { return w ? "(" + s + ")" : s; };
  switch (f.kind) {
    case K::True: return "true";
    case K::False: return "false";
    case K::Equal: return print_term(f.terms[0]) + " = " + print_term(f.terms[1]);
    case K::Atom: {
      std::string head = f.pred.name;
      if (!f.pred.mods.empty()) {
        std::string mods;
        for (Modality m : f.pred.mods) mods += m == Modality::Dia ? "dia " : "box ";
        head = "(" + mods + head + ")";
      }
      return print_term(Term::app(head, f.terms));
    }
    case K::Implies: return wrap(ctx > 1, print_at(f.kids[0], 2) + " -> " + print_at(f.kids[1], 1));
    case K::Or: return wrap(ctx > 2, print_at(f.kids[0], 2) + " | " + print_at(f.kids[1], 3));
    case K::And: return wrap(ctx > 3, print_at(f.kids[0], 3) + " & " + print_at(f.kids[1], 4));
    case K::Not: return "~" + print_at(f.kids[0], 4);
    case K::Dia: return "dia " + print_at(f.kids[0], 4);
    case K::Box: return "box " + print_at(f.kids[0], 4);
    case K::Exists:
    case K::Forall:
      return wrap(ctx > 0, std::string(f.kind == K::Exists ? "exists " : "forall ") + f.var + ":" + f.sort + ". " +
                               print_at(f.kids[0], 0));
  }
  return "";
}

}  // namespace

std::string print_formula(const Formula& f) { return print_at(f, 0); }

// ---------------------------------------------------------------- sorts

namespace {

// Walks a formula assigning sorts. In inference mode unknown variables
// become free variables; in checking mode they must come from the context.
class SortWalker {
 public:
  SortWalker(const Signature& sig, bool infer, Context ctx) : sig_(sig), infer_(infer), free_(std::move(ctx)) {}

  void formula(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind) {
      case K::True:
      case K::False: return;
      case K::Atom: {
        const PredicateSymbol* p = sig_.predicate(f.pred.name);
        if (!p) mismatch("unknown predicate '" + f.pred.name + "'", print_formula(f));
        if (p->args.size() != f.terms.size()) mismatch("wrong number of arguments", print_formula(f));
        for (std::size_t i = 0; i < f.terms.size(); ++i) term(f.terms[i], p->args[i]);
        return;
      }
      case K::Equal: {
        auto a = term(f.terms[0], std::nullopt);
        auto b = term(f.terms[1], a);
        if (!a && b) a = term(f.terms[0], b);
        if (!a || !b) mismatch("cannot determine the sort of an equation", print_formula(f));
        return;
      }
      case K::Exists:
      case K::Forall:
        if (!sig_.has_sort(f.sort)) mismatch("unknown sort '" + f.sort + "'", print_formula(f));
        bound_.emplace_back(f.var, f.sort);
        formula(f.kids[0]);
        bound_.pop_back();
        return;
      default:
        for (const auto& k : f.kids) formula(k);
    }
  }

  const Context& free_vars() const { return free_; }

 private:
  [[noreturn]] void mismatch(const std::string& what, const std::string& subterm) const {
    throw Error(infer_ ? ErrorKind::SortError : ErrorKind::SortMismatch, what + " in '" + subterm + "'");
  }

  std::optional<std::string> lookup(const std::string& v) const {
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
      if (it->first == v) return it->second;
    }
    for (auto it = free_.rbegin(); it != free_.rend(); ++it) {
      if (it->first == v) return it->second;
    }
    return std::nullopt;
  }

  std::optional<std::string> term(const Term& t, const std::optional<std::string>& expected) {
    if (!t.is_app) {
      auto s = lookup(t.name);
      if (!s) {
        if (!infer_) throw Error(ErrorKind::UnboundVariable, "variable '" + t.name + "' is not in the context");
        if (!expected) return std::nullopt;
        free_.emplace_back(t.name, *expected);
        return expected;
      }
      if (expected && *s != *expected) {
        mismatch("variable of sort " + *s + " used at sort " + *expected, t.name);
      }
      return s;
    }
    const FunctionSymbol* f = sig_.function(t.name);
    if (!f) mismatch("unknown function '" + t.name + "'", print_term(t));
    if (f->args.size() != t.args.size()) mismatch("wrong number of arguments", print_term(t));
    for (std::size_t i = 0; i < t.args.size(); ++i) term(t.args[i], f->args[i]);
    if (expected && f->result != *expected) {
      mismatch("term of sort " + f->result + " used at sort " + *expected, print_term(t));
    }
    return f->result;
  }

  const Signature& sig_;
  bool infer_;
  Context free_;
  Context bound_;
};

}  // namespace

Context infer_context(const Signature& sig, const Formula& f) { return infer_context(sig, std::vector<Formula>{f}); }

Context infer_context(const Signature& sig, const std::vector<Formula>& fs) {
  SortWalker w(sig, true, {});
  for (const auto& f : fs) w.formula(f);
  return w.free_vars();
}

// ---------------------------------------------------------------- models

FiniteSpace product_of(const std::vector<FiniteSpace>& spaces) {
  if (spaces.empty()) return point_space();
  FiniteSpace out = spaces[0];
  for (std::size_t i = 1; i < spaces.size(); ++i) out = product(out, spaces[i]).space;
  return out;
}

Interpretation::Interpretation(Signature sig) : sig_(std::move(sig)) {}

void Interpretation::set_sort(const std::string& name, FiniteSpace space) {
  if (!sig_.has_sort(name)) throw Error(ErrorKind::InvalidModel, "undeclared sort '" + name + "'");
  sorts_[name] = std::move(space);
}

FiniteSpace Interpretation::space_of(const std::vector<std::string>& sorts) const {
  std::vector<FiniteSpace> spaces;
  for (const auto& s : sorts) spaces.push_back(sort(s));
  return product_of(spaces);
}

FiniteSpace Interpretation::context_space(const Context& ctx) const {
  std::vector<std::string> sorts;
  for (const auto& [v, s] : ctx) sorts.push_back(s);
  return space_of(sorts);
}

void Interpretation::set_function(const std::string& name, PartialMap map) {
  const FunctionSymbol* f = sig_.function(name);
  if (!f) throw Error(ErrorKind::InvalidModel, "undeclared function '" + name + "'");
  const FunctionSymbol sym = *f;
  if (!map.source().same_topology(space_of(sym.args)) || !map.target().same_topology(sort(sym.result))) {
    throw Error(ErrorKind::InvalidModel, "function '" + name + "' does not match its sort profile");
  }
  if (!is_continuous_partial(map)) throw Error(ErrorKind::InvalidModel, "function '" + name + "' is not continuous");
  if (sym.kind != FunctionKind::Partial && !map.is_total()) {
    throw Error(ErrorKind::InvalidModel, "function '" + name + "' must be total");
  }
  if (sym.kind == FunctionKind::Embedding) {
    if (sym.args.size() != 1) throw Error(ErrorKind::InvalidModel, "embedding '" + name + "' must be unary");
    if (!is_embedding(map.to_total())) throw Error(ErrorKind::InvalidModel, "function '" + name + "' is not an embedding");
    std::vector<std::optional<std::size_t>> inverse(map.target().size());
    for (std::size_t x = 0; x < map.values().size(); ++x) inverse[*map(x)] = x;
    const std::string inv = name + "_inv";
    if (!sig_.function(inv)) sig_.add_function(FunctionSymbol{inv, {sym.result}, sym.args[0], FunctionKind::Partial});
    functions_[inv] = PartialMap(map.target(), map.source(), std::move(inverse));
  }
  functions_[name] = std::move(map);
}

void Interpretation::set_predicate(const std::string& name, PointSet members) {
  const PredicateSymbol* p = sig_.predicate(name);
  if (!p) throw Error(ErrorKind::InvalidModel, "undeclared predicate '" + name + "'");
  if (members.universe() != space_of(p->args).size()) {
    throw Error(ErrorKind::InvalidModel, "predicate '" + name + "' does not match its sort profile");
  }
  predicates_[name] = std::move(members);
}

void Interpretation::validate() const {
  for (const auto& s : sig_.sorts()) {
    if (!sorts_.count(s)) throw Error(ErrorKind::InvalidModel, "sort '" + s + "' is not interpreted");
  }
  for (const auto& f : sig_.functions()) {
    if (!functions_.count(f.name)) throw Error(ErrorKind::InvalidModel, "function '" + f.name + "' is not interpreted");
  }
  for (const auto& p : sig_.predicates()) {
    if (!predicates_.count(p.name)) throw Error(ErrorKind::InvalidModel, "predicate '" + p.name + "' is not interpreted");
  }
}

const FiniteSpace& Interpretation::sort(const std::string& name) const {
  auto it = sorts_.find(name);
  if (it == sorts_.end()) throw Error(ErrorKind::InvalidModel, "sort '" + name + "' is not interpreted");
  return it->second;
}

const PartialMap& Interpretation::function(const std::string& name) const {
  auto it = functions_.find(name);
  if (it == functions_.end()) throw Error(ErrorKind::InvalidModel, "function '" + name + "' is not interpreted");
  return it->second;
}

const PointSet& Interpretation::predicate(const std::string& name) const {
  auto it = predicates_.find(name);
  if (it == predicates_.end()) throw Error(ErrorKind::InvalidModel, "predicate '" + name + "' is not interpreted");
  return it->second;
}

// ---------------------------------------------------------------- evaluation

namespace {

struct Env {
  std::vector<std::string> vars;
  std::vector<std::size_t> sizes;
  FiniteSpace space = point_space();

  Env extend(const std::string& v, const FiniteSpace& s) const {
    Env out = *this;
    out.space = vars.empty() ? s : product(space, s).space;
    out.vars.push_back(v);
    out.sizes.push_back(s.size());
    return out;
  }

  std::vector<std::size_t> decode(std::size_t point) const {
    std::vector<std::size_t> digits(sizes.size());
    for (std::size_t k = sizes.size(); k-- > 0;) {
      digits[k] = point % sizes[k];
      point /= sizes[k];
    }
    return digits;
  }
};

class Evaluator {
 public:
  explicit Evaluator(const Interpretation& m) : m_(m) {}

  PointSet eval(const Formula& f, const Env& env) const {
    using K = Formula::Kind;
    const std::size_t n = env.vars.empty() ? 1 : env.space.size();
    switch (f.kind) {
      case K::True: return PointSet::full(n);
      case K::False: return PointSet(n);
      case K::Atom: {
        const PredicateSymbol& p = *m_.signature().predicate(f.pred.name);
        const FiniteSpace args = m_.arg_space(p.args);
        PointSet members = m_.predicate(p.name);
        for (auto it = f.pred.mods.rbegin(); it != f.pred.mods.rend(); ++it) {
          members = *it == Modality::Dia ? args.closure(members) : args.interior(members);
        }
        PointSet out(n);
        for (std::size_t c = 0; c < n; ++c) {
          const auto digits = env.decode(c);
          auto idx = tuple(f.terms, p.args, env, digits);
          if (idx && members.test(*idx)) out.set(c);
        }
        return out;
      }
      case K::Equal: {
        PointSet out(n);
        for (std::size_t c = 0; c < n; ++c) {
          const auto digits = env.decode(c);
          auto a = term(f.terms[0], env, digits);
          auto b = term(f.terms[1], env, digits);
          if (a && b && *a == *b) out.set(c);
        }
        return out;
      }
      case K::And: return eval(f.kids[0], env) & eval(f.kids[1], env);
      case K::Or: return eval(f.kids[0], env) | eval(f.kids[1], env);
      case K::Not: return eval(f.kids[0], env).complement();
      case K::Implies: return eval(f.kids[0], env).complement() | eval(f.kids[1], env);
      case K::Dia: return closure(env, eval(f.kids[0], env), true);
      case K::Box: return closure(env, eval(f.kids[0], env), false);
      case K::Exists:
      case K::Forall: {
        const FiniteSpace& s = m_.sort(f.sort);
        const PointSet body = eval(f.kids[0], env.extend(f.var, s));
        PointSet out(n);
        const bool ex = f.kind == K::Exists;
        for (std::size_t c = 0; c < n; ++c) {
          bool any = false;
          bool all = true;
          for (std::size_t v = 0; v < s.size(); ++v) {
            const bool in = body.test(c * s.size() + v);
            any = any || in;
            all = all && in;
          }
          if (ex ? any : all) out.set(c);
        }
        return out;
      }
    }
    return PointSet(n);
  }

 private:
  static PointSet closure(const Env& env, const PointSet& a, bool dia) {
    if (env.vars.empty()) return a;
    return dia ? env.space.closure(a) : env.space.interior(a);
  }

  std::optional<std::size_t> tuple(const std::vector<Term>& terms, const std::vector<std::string>& sorts,
                                    const Env& env, const std::vector<std::size_t>& digits) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      auto v = term(terms[i], env, digits);
      if (!v) return std::nullopt;
      idx = idx * m_.sort(sorts[i]).size() + *v;
    }
    return idx;
  }

  std::optional<std::size_t> term(const Term& t, const Env& env, const std::vector<std::size_t>& digits) const {
    if (!t.is_app) {
      for (std::size_t k = env.vars.size(); k-- > 0;) {
        if (env.vars[k] == t.name) return digits[k];
      }
      throw Error(ErrorKind::UnboundVariable, "variable '" + t.name + "'");
    }
    const FunctionSymbol& f = *m_.signature().function(t.name);
    auto idx = tuple(t.args, f.args, env, digits);
    if (!idx) return std::nullopt;
    return m_.function(t.name)(*idx);
  }

  const Interpretation& m_;
};

Env env_of(const Interpretation& model, const Context& ctx) {
  Env env;
  for (const auto& [v, s] : ctx) {
    if (!model.signature().has_sort(s)) throw Error(ErrorKind::SortMismatch, "context uses unknown sort '" + s + "'");
    env = env.extend(v, model.sort(s));
  }
  return env;
}

}  // namespace

PointSet eval(const Interpretation& model, const Formula& f, const Context& ctx) {
  SortWalker(model.signature(), false, ctx).formula(f);
  return Evaluator(model).eval(f, env_of(model, ctx));
}

std::vector<std::pair<std::string, std::string>> decode_point(const Interpretation& model, const Context& ctx,
                                                              std::size_t point) {
  const Env env = env_of(model, ctx);
  const auto digits = env.decode(point);
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t k = 0; k < ctx.size(); ++k) out.emplace_back(ctx[k].first, model.sort(ctx[k].second).name(digits[k]));
  return out;
}

SequentResult check_sequent(const Interpretation& model, const Formula& antecedent, const Formula& consequent,
                            const Context& ctx) {
  const PointSet bad = eval(model, antecedent, ctx) - eval(model, consequent, ctx);
  SequentResult r;
  if (bad.any()) {
    r.holds = false;
    r.counterexample = decode_point(model, ctx, bad.indices().front());
  }
  return r;
}

// ---------------------------------------------------------------- generators

Signature sample_signature() {
  Signature sig;
  sig.add_sort("X");
  sig.add_sort("Y");
  sig.add_function({"f", {"X"}, "Y", FunctionKind::Total});
  sig.add_function({"g", {"X", "Y"}, "X", FunctionKind::Partial});
  sig.add_function({"c", {}, "X", FunctionKind::Total});
  sig.add_function({"e", {"X"}, "X", FunctionKind::Embedding});
  sig.add_predicate({"P", {"X"}});
  sig.add_predicate({"Q", {"Y"}});
  sig.add_predicate({"R", {"X", "X"}});
  return sig;
}

namespace {

class FormulaGen {
 public:
  FormulaGen(Rng& rng, const Signature& sig) : rng_(rng), sig_(sig) {}

  Formula formula(Context& env, std::size_t depth) {
    if (depth == 0 || rng_.chance(1, 4)) return atom(env);
    switch (rng_.below(8)) {
      case 0: return Formula::conj(formula(env, depth - 1), formula(env, depth - 1));
      case 1: return Formula::disj(formula(env, depth - 1), formula(env, depth - 1));
      case 2: return Formula::neg(formula(env, depth - 1));
      case 3: return Formula::implies(formula(env, depth - 1), formula(env, depth - 1));
      case 4: return Formula::dia(formula(env, depth - 1));
      case 5: return Formula::box(formula(env, depth - 1));
      default: {
        const std::string var = "v" + std::to_string(fresh_++);
        const std::string sort = sig_.sorts()[rng_.below(sig_.sorts().size())];
        env.emplace_back(var, sort);
        Formula body = formula(env, depth - 1);
        env.pop_back();
        return rng_.chance(1, 2) ? Formula::exists(var, sort, std::move(body))
                                 : Formula::forall(var, sort, std::move(body));
      }
    }
  }

 private:
  std::optional<Term> term(const Context& env, const std::string& sort, std::size_t depth) {
    std::vector<const FunctionSymbol*> fs;
    for (const auto& f : sig_.functions()) {
      if (f.result == sort) fs.push_back(&f);
    }
    std::vector<std::string> vars;
    for (const auto& [v, s] : env) {
      if (s == sort) vars.push_back(v);
    }
    const bool use_fn = !fs.empty() && depth > 0 && (vars.empty() || rng_.chance(1, 3));
    if (use_fn) {
      const FunctionSymbol& f = *fs[rng_.below(fs.size())];
      std::vector<Term> args;
      for (const auto& s : f.args) {
        auto t = term(env, s, depth - 1);
        if (!t) return std::nullopt;
        args.push_back(std::move(*t));
      }
      return Term::app(f.name, std::move(args));
    }
    if (vars.empty()) return std::nullopt;
    return Term::var(vars[rng_.below(vars.size())]);
  }

  Formula atom(const Context& env) {
    const std::uint64_t pick = rng_.below(10);
    if (pick == 0) return rng_.chance(1, 2) ? Formula::truth() : Formula::falsity();
    if (pick <= 2) {
      const std::string sort = sig_.sorts()[rng_.below(sig_.sorts().size())];
      auto a = term(env, sort, 2);
      auto b = term(env, sort, 2);
      if (a && b) return Formula::equal(std::move(*a), std::move(*b));
      return Formula::truth();
    }
    if (sig_.predicates().empty()) return Formula::truth();
    const PredicateSymbol& p = sig_.predicates()[rng_.below(sig_.predicates().size())];
    PredExpr pe{p.name, {}};
    while (rng_.chance(1, 4)) pe.mods.push_back(rng_.chance(1, 2) ? Modality::Dia : Modality::Box);
    std::vector<Term> args;
    for (const auto& s : p.args) {
      auto t = term(env, s, 2);
      if (!t) return Formula::falsity();
      args.push_back(std::move(*t));
    }
    return Formula::atom(std::move(pe), std::move(args));
  }

  Rng& rng_;
  const Signature& sig_;
  std::size_t fresh_ = 0;
};

}  // namespace

Formula random_formula(Rng& rng, const Signature& sig, const Context& ctx, std::size_t depth) {
  Context env = ctx;
  return FormulaGen(rng, sig).formula(env, depth);
}

Interpretation random_model(Rng& rng, std::size_t max_points) {
  Interpretation m(sample_signature());
  const FiniteSpace x = random_space(rng, max_points);
  const FiniteSpace y = random_space(rng, max_points);
  m.set_sort("X", x);
  m.set_sort("Y", y);
  m.set_function("f", random_continuous_map(rng, x, y, true));
  m.set_function("g", random_continuous_map(rng, m.arg_space({"X", "Y"}), x, false));
  m.set_function("c", PartialMap::from_total(TotalMap::constant(point_space(), x, rng.below(x.size()))));
  m.set_function("e", PartialMap::from_total(TotalMap::identity(x)));
  m.set_predicate("P", rng.subset(x.size()));
  m.set_predicate("Q", rng.subset(y.size()));
  m.set_predicate("R", rng.subset(x.size() * x.size()));
  return m;
}

}  // namespace topocat
