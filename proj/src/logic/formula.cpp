#include "contsem/formula.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace contsem {

struct EntityTerm::Node {
  Kind kind;
  std::string name;
  std::optional<EnvExpr> env;
  std::size_t site = 0;
};

struct EnvExpr::Node {
  Kind kind;
  std::optional<EntityTerm> head;
  std::optional<EnvExpr> first;  // Cons tail or Union left
  std::optional<EnvExpr> second;  // Union right
};

struct Formula::Node {
  Kind kind;
  std::string name;  // Exists variable or Atom predicate
  std::optional<Formula> first;
  std::optional<Formula> second;
  std::vector<EntityTerm> args;
};

// ---- EntityTerm ----

EntityTerm EntityTerm::constant(std::string name) {
  return EntityTerm(std::make_shared<Node>(Node{Kind::Const, std::move(name), std::nullopt, 0}));
}

EntityTerm EntityTerm::variable(std::string name) {
  return EntityTerm(std::make_shared<Node>(Node{Kind::Var, std::move(name), std::nullopt, 0}));
}

EntityTerm EntityTerm::sel(EnvExpr env, std::size_t site) {
  return EntityTerm(std::make_shared<Node>(Node{Kind::Sel, "", std::move(env), site}));
}

EntityTerm::Kind EntityTerm::kind() const { return node_->kind; }

const std::string& EntityTerm::name() const {
  if (kind() == Kind::Sel) throw std::logic_error("name() of a sel site");
  return node_->name;
}

const EnvExpr& EntityTerm::env() const {
  if (kind() != Kind::Sel) throw std::logic_error("env() of a non-sel entity");
  return *node_->env;
}

std::size_t EntityTerm::site() const {
  if (kind() != Kind::Sel) throw std::logic_error("site() of a non-sel entity");
  return node_->site;
}

bool operator==(const EntityTerm& a, const EntityTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == EntityTerm::Kind::Sel) return a.site() == b.site() && a.env() == b.env();
  return a.name() == b.name();
}

// ---- EnvExpr ----

EnvExpr EnvExpr::nil() {
  static const EnvExpr empty(std::make_shared<Node>(Node{Kind::Nil, std::nullopt, std::nullopt, std::nullopt}));
  return empty;
}

EnvExpr EnvExpr::cons(EntityTerm head, EnvExpr tail) {
  if (head.kind() == EntityTerm::Kind::Sel) {
    throw std::invalid_argument("environment heads must be constants or variables");
  }
  return EnvExpr(std::make_shared<Node>(Node{Kind::Cons, std::move(head), std::move(tail), std::nullopt}));
}

EnvExpr EnvExpr::union_of(EnvExpr left, EnvExpr right) {
  return EnvExpr(std::make_shared<Node>(Node{Kind::Union, std::nullopt, std::move(left), std::move(right)}));
}

EnvExpr EnvExpr::list(const std::vector<EntityTerm>& referents) {
  EnvExpr env = nil();
  for (auto it = referents.rbegin(); it != referents.rend(); ++it) env = cons(*it, env);
  return env;
}

EnvExpr::Kind EnvExpr::kind() const { return node_->kind; }

const EntityTerm& EnvExpr::head() const {
  if (kind() != Kind::Cons) throw std::logic_error("head() of a non-cons environment");
  return *node_->head;
}

const EnvExpr& EnvExpr::tail() const {
  if (kind() != Kind::Cons) throw std::logic_error("tail() of a non-cons environment");
  return *node_->first;
}

const EnvExpr& EnvExpr::left() const {
  if (kind() != Kind::Union) throw std::logic_error("left() of a non-union environment");
  return *node_->first;
}

const EnvExpr& EnvExpr::right() const {
  if (kind() != Kind::Union) throw std::logic_error("right() of a non-union environment");
  return *node_->second;
}

bool operator==(const EnvExpr& a, const EnvExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case EnvExpr::Kind::Nil:
      return true;
    case EnvExpr::Kind::Cons:
      return a.head() == b.head() && a.tail() == b.tail();
    case EnvExpr::Kind::Union:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

// ---- Formula ----

Formula Formula::top() {
  static const Formula f(std::make_shared<Node>(Node{Kind::Top, "", std::nullopt, std::nullopt, {}}));
  return f;
}

Formula Formula::bot() {
  static const Formula f(std::make_shared<Node>(Node{Kind::Bot, "", std::nullopt, std::nullopt, {}}));
  return f;
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<Node>(Node{Kind::Not, "", std::move(operand), std::nullopt, {}}));
}

Formula Formula::conjunction(Formula left, Formula right) {
  return Formula(std::make_shared<Node>(Node{Kind::And, "", std::move(left), std::move(right), {}}));
}

Formula Formula::disjunction(Formula left, Formula right) {
  return Formula(std::make_shared<Node>(Node{Kind::Or, "", std::move(left), std::move(right), {}}));
}

Formula Formula::exists(std::string var, Formula body) {
  return Formula(std::make_shared<Node>(Node{Kind::Exists, std::move(var), std::move(body), std::nullopt, {}}));
}

Formula Formula::atom(std::string predicate, std::vector<EntityTerm> args) {
  return Formula(std::make_shared<Node>(Node{Kind::Atom, std::move(predicate), std::nullopt, std::nullopt, std::move(args)}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const Formula& Formula::operand() const {
  if (kind() != Kind::Not) throw std::logic_error("operand() of a non-negation");
  return *node_->first;
}

const Formula& Formula::left() const {
  if (kind() != Kind::And && kind() != Kind::Or) throw std::logic_error("left() of a non-binary formula");
  return *node_->first;
}

const Formula& Formula::right() const {
  if (kind() != Kind::And && kind() != Kind::Or) throw std::logic_error("right() of a non-binary formula");
  return *node_->second;
}

const std::string& Formula::var() const {
  if (kind() != Kind::Exists) throw std::logic_error("var() of a non-quantifier");
  return node_->name;
}

const Formula& Formula::body() const {
  if (kind() != Kind::Exists) throw std::logic_error("body() of a non-quantifier");
  return *node_->first;
}

const std::string& Formula::predicate() const {
  if (kind() != Kind::Atom) throw std::logic_error("predicate() of a non-atom");
  return node_->name;
}

const std::vector<EntityTerm>& Formula::args() const {
  if (kind() != Kind::Atom) throw std::logic_error("args() of a non-atom");
  return node_->args;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return true;
    case Formula::Kind::Not:
      return a.operand() == b.operand();
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return a.left() == b.left() && a.right() == b.right();
    case Formula::Kind::Exists:
      return a.var() == b.var() && a.body() == b.body();
    case Formula::Kind::Atom:
      return a.predicate() == b.predicate() && a.args() == b.args();
  }
  return false;
}

// ---- alpha equivalence ----

namespace {

using Binders = std::vector<std::pair<std::string, std::string>>;

// Position of `name` among the enclosing binders of one side, innermost first.
std::optional<std::size_t> binder_depth(const std::vector<std::string>& stack, const std::string& name) {
  for (std::size_t i = stack.size(); i-- > 0;) {
    if (stack[i] == name) return stack.size() - 1 - i;
  }
  return std::nullopt;
}

struct AlphaCompare {
  std::vector<std::string> left_stack;
  std::vector<std::string> right_stack;

  bool entity(const EntityTerm& a, const EntityTerm& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case EntityTerm::Kind::Const:
        return a.name() == b.name();
      case EntityTerm::Kind::Var: {
        auto da = binder_depth(left_stack, a.name());
        auto db = binder_depth(right_stack, b.name());
        if (da.has_value() != db.has_value()) return false;
        return da ? *da == *db : a.name() == b.name();
      }
      case EntityTerm::Kind::Sel:
        return env(a.env(), b.env());
    }
    return false;
  }

  bool env(const EnvExpr& a, const EnvExpr& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case EnvExpr::Kind::Nil:
        return true;
      case EnvExpr::Kind::Cons:
        return entity(a.head(), b.head()) && env(a.tail(), b.tail());
      case EnvExpr::Kind::Union:
        return env(a.left(), b.left()) && env(a.right(), b.right());
    }
    return false;
  }

  bool formula(const Formula& a, const Formula& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Formula::Kind::Top:
      case Formula::Kind::Bot:
        return true;
      case Formula::Kind::Not:
        return formula(a.operand(), b.operand());
      case Formula::Kind::And:
      case Formula::Kind::Or:
        return formula(a.left(), b.left()) && formula(a.right(), b.right());
      case Formula::Kind::Exists: {
        left_stack.push_back(a.var());
        right_stack.push_back(b.var());
        bool same = formula(a.body(), b.body());
        left_stack.pop_back();
        right_stack.pop_back();
        return same;
      }
      case Formula::Kind::Atom: {
        if (a.predicate() != b.predicate() || a.args().size() != b.args().size()) return false;
        for (std::size_t i = 0; i < a.args().size(); ++i) {
          if (!entity(a.args()[i], b.args()[i])) return false;
        }
        return true;
      }
    }
    return false;
  }
};

void free_in_entity(const EntityTerm& t, std::vector<std::string>& bound, std::vector<std::string>& out);

void free_in_env(const EnvExpr& env, std::vector<std::string>& bound, std::vector<std::string>& out) {
  switch (env.kind()) {
    case EnvExpr::Kind::Nil:
      return;
    case EnvExpr::Kind::Cons:
      free_in_entity(env.head(), bound, out);
      free_in_env(env.tail(), bound, out);
      return;
    case EnvExpr::Kind::Union:
      free_in_env(env.left(), bound, out);
      free_in_env(env.right(), bound, out);
      return;
  }
}

void free_in_entity(const EntityTerm& t, std::vector<std::string>& bound, std::vector<std::string>& out) {
  switch (t.kind()) {
    case EntityTerm::Kind::Const:
      return;
    case EntityTerm::Kind::Var:
      if (std::find(bound.begin(), bound.end(), t.name()) == bound.end() &&
          std::find(out.begin(), out.end(), t.name()) == out.end()) {
        out.push_back(t.name());
      }
      return;
    case EntityTerm::Kind::Sel:
      free_in_env(t.env(), bound, out);
      return;
  }
}

void free_in_formula(const Formula& f, std::vector<std::string>& bound, std::vector<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return;
    case Formula::Kind::Not:
      free_in_formula(f.operand(), bound, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      free_in_formula(f.left(), bound, out);
      free_in_formula(f.right(), bound, out);
      return;
    case Formula::Kind::Exists:
      bound.push_back(f.var());
      free_in_formula(f.body(), bound, out);
      bound.pop_back();
      return;
    case Formula::Kind::Atom:
      for (const auto& a : f.args()) free_in_entity(a, bound, out);
      return;
  }
}

void collect_sites(const Formula& f, std::vector<EntityTerm>& out) {
  switch (f.kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return;
    case Formula::Kind::Not:
      collect_sites(f.operand(), out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      collect_sites(f.left(), out);
      collect_sites(f.right(), out);
      return;
    case Formula::Kind::Exists:
      collect_sites(f.body(), out);
      return;
    case Formula::Kind::Atom:
      for (const auto& a : f.args()) {
        if (a.kind() == EntityTerm::Kind::Sel) out.push_back(a);
      }
      return;
  }
}

Formula renumber(const Formula& f, std::size_t& next) {
  switch (f.kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return f;
    case Formula::Kind::Not:
      return Formula::negation(renumber(f.operand(), next));
    case Formula::Kind::And: {
      Formula l = renumber(f.left(), next);
      return Formula::conjunction(std::move(l), renumber(f.right(), next));
    }
    case Formula::Kind::Or: {
      Formula l = renumber(f.left(), next);
      return Formula::disjunction(std::move(l), renumber(f.right(), next));
    }
    case Formula::Kind::Exists:
      return Formula::exists(f.var(), renumber(f.body(), next));
    case Formula::Kind::Atom: {
      std::vector<EntityTerm> args;
      for (const auto& a : f.args()) {
        args.push_back(a.kind() == EntityTerm::Kind::Sel ? EntityTerm::sel(a.env(), next++) : a);
      }
      return Formula::atom(f.predicate(), std::move(args));
    }
  }
  return f;
}

}  // namespace

bool alpha_equivalent(const Formula& a, const Formula& b) { return AlphaCompare{}.formula(a, b); }

std::vector<std::string> free_variables(const Formula& f) {
  std::vector<std::string> bound;
  std::vector<std::string> out;
  free_in_formula(f, bound, out);
  return out;
}

bool occurs_free(const std::string& var, const Formula& f) {
  auto vars = free_variables(f);
  return std::find(vars.begin(), vars.end(), var) != vars.end();
}

std::vector<EntityTerm> sel_sites(const Formula& f) {
  std::vector<EntityTerm> out;
  collect_sites(f, out);
  return out;
}

Formula renumber_sites(const Formula& f) {
  std::size_t next = 0;
  return renumber(f, next);
}

}  // namespace contsem
