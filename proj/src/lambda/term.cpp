#include "contsem/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "contsem/errors.hpp"

namespace contsem {

struct Term::Node {
  Kind kind;
  std::size_t index = 0;
  std::string name;
  std::optional<SemType> type;  // Lam annotation or Const type
  std::optional<Term> first;    // Lam body or App function
  std::optional<Term> second;   // App argument
  std::size_t size = 1;
};

Term Term::var(std::size_t index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->index = index;
  return Term(std::move(node));
}

Term Term::lam(SemType annotation, Term body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Lam;
  node->size = 1 + body.size();
  node->type = std::move(annotation);
  node->first = std::move(body);
  return Term(std::move(node));
}

Term Term::app(Term fun, Term arg) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::App;
  node->size = 1 + fun.size() + arg.size();
  node->first = std::move(fun);
  node->second = std::move(arg);
  return Term(std::move(node));
}

Term Term::apply(Term fun, std::initializer_list<Term> args) {
  for (const auto& a : args) fun = app(std::move(fun), a);
  return fun;
}

Term Term::apply(Term fun, const std::vector<Term>& args) {
  for (const auto& a : args) fun = app(std::move(fun), a);
  return fun;
}

Term Term::constant(std::string name, SemType type) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Const;
  node->name = std::move(name);
  node->type = std::move(type);
  return Term(std::move(node));
}

Term::Kind Term::kind() const { return node_->kind; }

bool Term::is_const(std::string_view name) const {
  return node_->kind == Kind::Const && node_->name == name;
}

std::size_t Term::index() const {
  if (!is_var()) throw std::logic_error("index() of a non-variable");
  return node_->index;
}

const SemType& Term::annotation() const {
  if (!is_lam()) throw std::logic_error("annotation() of a non-abstraction");
  return *node_->type;
}

const Term& Term::body() const {
  if (!is_lam()) throw std::logic_error("body() of a non-abstraction");
  return *node_->first;
}

const Term& Term::fun() const {
  if (!is_app()) throw std::logic_error("fun() of a non-application");
  return *node_->first;
}

const Term& Term::arg() const {
  if (!is_app()) throw std::logic_error("arg() of a non-application");
  return *node_->second;
}

const std::string& Term::name() const {
  if (!is_const()) throw std::logic_error("name() of a non-constant");
  return node_->name;
}

const SemType& Term::type() const {
  if (!is_const()) throw std::logic_error("type() of a non-constant");
  return *node_->type;
}

std::size_t Term::size() const { return node_->size; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Term::Kind::Var:
      return a.index() == b.index();
    case Term::Kind::Lam:
      return a.annotation() == b.annotation() && a.body() == b.body();
    case Term::Kind::App:
      return a.fun() == b.fun() && a.arg() == b.arg();
    case Term::Kind::Const:
      return a.name() == b.name() && a.type() == b.type();
  }
  return false;
}

Spine spine(const Term& term) {
  std::vector<Term> args;
  const Term* cur = &term;
  while (cur->is_app()) {
    args.push_back(cur->arg());
    cur = &cur->fun();
  }
  std::reverse(args.begin(), args.end());
  return Spine{*cur, std::move(args)};
}

namespace {

bool closed_at(const Term& term, std::size_t depth) {
  switch (term.kind()) {
    case Term::Kind::Var:
      return term.index() < depth;
    case Term::Kind::Lam:
      return closed_at(term.body(), depth + 1);
    case Term::Kind::App:
      return closed_at(term.fun(), depth) && closed_at(term.arg(), depth);
    case Term::Kind::Const:
      return true;
  }
  return false;
}

void collect_constants(const Term& term, std::set<std::string>& out) {
  switch (term.kind()) {
    case Term::Kind::Var:
      return;
    case Term::Kind::Lam:
      collect_constants(term.body(), out);
      return;
    case Term::Kind::App:
      collect_constants(term.fun(), out);
      collect_constants(term.arg(), out);
      return;
    case Term::Kind::Const:
      out.insert(term.name());
      return;
  }
}

}  // namespace

bool is_closed(const Term& term) { return closed_at(term, 0); }

Term rename_constant(const Term& term, std::string_view from, const std::string& to) {
  switch (term.kind()) {
    case Term::Kind::Var:
      return term;
    case Term::Kind::Lam:
      return Term::lam(term.annotation(), rename_constant(term.body(), from, to));
    case Term::Kind::App:
      return Term::app(rename_constant(term.fun(), from, to), rename_constant(term.arg(), from, to));
    case Term::Kind::Const:
      return term.name() == from ? Term::constant(to, term.type()) : term;
  }
  return term;
}

std::vector<std::string> constant_names(const Term& term) {
  std::set<std::string> names;
  collect_constants(term, names);
  return {names.begin(), names.end()};
}

namespace builtin {

namespace {
const SemType& e() {
  static const SemType type = SemType::e();
  return type;
}
const SemType& t() {
  static const SemType type = SemType::t();
  return type;
}
const SemType& g() {
  static const SemType type = SemType::g();
  return type;
}
}  // namespace

Term not_() { return Term::constant(std::string(kNot), SemType::arrow(t(), t())); }
Term and_() { return Term::constant(std::string(kAnd), kappa_b()); }
Term or_() { return Term::constant(std::string(kOr), kappa_b()); }
Term top() { return Term::constant(std::string(kTop), t()); }
Term bot() { return Term::constant(std::string(kBot), t()); }
Term exists() {
  return Term::constant(std::string(kExists), SemType::arrow(SemType::arrow(e(), t()), t()));
}
Term cons() { return Term::constant(std::string(kCons), SemType::chain({e(), g(), g()})); }
Term union_() { return Term::constant(std::string(kUnion), kappa_c()); }
Term nil() { return Term::constant(std::string(kNil), g()); }
Term sel() { return Term::constant(std::string(kSel), SemType::arrow(g(), e())); }
Term coord() { return Term::constant(std::string(kCoord), kappa_c()); }
Term sub() { return Term::constant(std::string(kSub), kappa_c()); }
Term dual() { return Term::constant(std::string(kDual), SemType::arrow(kappa_b(), kappa_b())); }

bool is_reserved(std::string_view name) {
  static const std::set<std::string_view> reserved = {kNot, kAnd,  kOr,  kTop,   kBot, kExists, kCons,
                                                      kUnion, kNil, kSel, kCoord, kSub, kDual};
  return reserved.count(name) > 0;
}

}  // namespace builtin

Signature::Signature() {
  for (const Term& c : {builtin::not_(), builtin::and_(), builtin::or_(), builtin::top(),
                        builtin::bot(), builtin::exists(), builtin::cons(), builtin::union_(),
                        builtin::nil(), builtin::sel(), builtin::coord(), builtin::sub(),
                        builtin::dual()}) {
    constants_.emplace(c.name(), c.type());
  }
}

namespace {

bool looks_like_binder_name(std::string_view name) {
  if (name.size() < 2 || name[0] != 'x') return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

Signature& Signature::declare(const std::string& name, SemType type) {
  if (builtin::is_reserved(name)) throw std::invalid_argument("'" + name + "' is a built-in constant");
  if (looks_like_binder_name(name))
    throw std::invalid_argument("'" + name + "' clashes with printer binder names");
  auto it = constants_.find(name);
  if (it != constants_.end()) {
    if (it->second != type)
      throw std::invalid_argument("'" + name + "' already declared as " + it->second.str());
    return *this;
  }
  constants_.emplace(name, std::move(type));
  return *this;
}

std::optional<Term> Signature::lookup(std::string_view name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) return std::nullopt;
  return Term::constant(it->first, it->second);
}

bool Signature::contains(std::string_view name) const { return constants_.find(name) != constants_.end(); }

const SemType* TypingContext::lookup(std::size_t index) const {
  if (index >= stack_.size()) return nullptr;
  return &stack_[stack_.size() - 1 - index];
}

namespace {

SemType typecheck_at(const Term& term, TypingContext& ctx, std::string& path) {
  switch (term.kind()) {
    case Term::Kind::Var: {
      const SemType* type = ctx.lookup(term.index());
      if (type == nullptr) throw UnboundVariable(term.index());
      return *type;
    }
    case Term::Kind::Const:
      return term.type();
    case Term::Kind::Lam: {
      ctx.push(term.annotation());
      path.push_back('b');
      SemType body = typecheck_at(term.body(), ctx, path);
      path.pop_back();
      ctx.pop();
      return SemType::arrow(term.annotation(), body);
    }
    case Term::Kind::App: {
      path.push_back('f');
      SemType fun = typecheck_at(term.fun(), ctx, path);
      path.pop_back();
      if (!fun.is_arrow()) throw TypeMismatch("a function type", fun.str(), path);
      path.push_back('a');
      SemType arg = typecheck_at(term.arg(), ctx, path);
      if (arg != fun.domain()) throw TypeMismatch(fun.domain().str(), arg.str(), path);
      path.pop_back();
      return fun.codomain();
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

SemType typecheck(const Term& term, const TypingContext& ctx) {
  TypingContext local = ctx;
  std::string path;
  return typecheck_at(term, local, path);
}

}  // namespace contsem
