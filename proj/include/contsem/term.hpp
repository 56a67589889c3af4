#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contsem/sem_type.hpp"

namespace contsem {

/// Lambda terms with De Bruijn indices (0 = nearest binder) and typed
/// constants. Immutable; subterms are shared.
class Term {
 public:
  enum class Kind { Var, Lam, App, Const };

  static Term var(std::size_t index);
  static Term lam(SemType annotation, Term body);
  static Term app(Term fun, Term arg);
  /// Left-nested application `fun a1 a2 ...`.
  static Term apply(Term fun, std::initializer_list<Term> args);
  static Term apply(Term fun, const std::vector<Term>& args);
  static Term constant(std::string name, SemType type);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_lam() const { return kind() == Kind::Lam; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_const() const { return kind() == Kind::Const; }
  bool is_const(std::string_view name) const;

  std::size_t index() const;
  const SemType& annotation() const;
  const Term& body() const;
  const Term& fun() const;
  const Term& arg() const;
  const std::string& name() const;
  const SemType& type() const;

  /// Number of nodes.
  std::size_t size() const;

  /// Alpha-equivalence: with De Bruijn indices this is structural equality,
  /// binder annotations included.
  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

  bool same_node(const Term& other) const { return node_ == other.node_; }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline bool alpha_eq(const Term& a, const Term& b) { return a == b; }

/// Splits `f a1 ... an` into head `f` and arguments.
struct Spine {
  Term head;
  std::vector<Term> args;
};
Spine spine(const Term& term);

/// True when no variable index escapes its binders.
bool is_closed(const Term& term);

/// Replaces every constant called `from` by a constant `to` of the same type.
Term rename_constant(const Term& term, std::string_view from, const std::string& to);

/// Collects the names of all constants in `term`.
std::vector<std::string> constant_names(const Term& term);

// Built-in constants. Their names double as their surface syntax.
namespace builtin {
inline constexpr std::string_view kNot = "~";
inline constexpr std::string_view kAnd = "&";
inline constexpr std::string_view kOr = "|";
inline constexpr std::string_view kTop = "top";
inline constexpr std::string_view kBot = "bot";
inline constexpr std::string_view kExists = "Ex";
inline constexpr std::string_view kCons = "::";
inline constexpr std::string_view kUnion = "++";
inline constexpr std::string_view kNil = "nil";
inline constexpr std::string_view kSel = "sel";
inline constexpr std::string_view kCoord = "Coord";
inline constexpr std::string_view kSub = "Sub";
inline constexpr std::string_view kDual = "dual";

Term not_();
Term and_();
Term or_();
Term top();
Term bot();
Term exists();
Term cons();
Term union_();
Term nil();
Term sel();
/// Coordinating relation, `\e1 e2. e2`; contracted when applied to two arguments.
Term coord();
/// Subordinating relation, `\e1 e2. e1 ++ e2`; contracted when applied to two arguments.
Term sub();
/// De Morgan dual of a propositional connective: dual (&) = (|), dual (|) = (&).
Term dual();

bool is_reserved(std::string_view name);
}  // namespace builtin

/// Constant declarations available to the parser: the built-ins plus any
/// user predicates and entity constants.
class Signature {
 public:
  /// A signature holding only the built-in constants.
  Signature();
  static Signature builtins() { return Signature(); }

  /// Declares `name : type`. Redeclaring with the same type is a no-op; a
  /// different type, a reserved name or a name shaped like a printer binder
  /// (`x<digits>`) throws std::invalid_argument.
  Signature& declare(const std::string& name, SemType type);

  std::optional<Term> lookup(std::string_view name) const;
  bool contains(std::string_view name) const;
  const std::map<std::string, SemType, std::less<>>& declarations() const { return constants_; }

 private:
  std::map<std::string, SemType, std::less<>> constants_;
};

/// Types of the variables bound around a subterm, innermost binder last.
class TypingContext {
 public:
  TypingContext() = default;

  void push(SemType type) { stack_.push_back(std::move(type)); }
  void pop() { stack_.pop_back(); }
  std::size_t depth() const { return stack_.size(); }
  /// Type of De Bruijn index `index`, if bound.
  const SemType* lookup(std::size_t index) const;

 private:
  std::vector<SemType> stack_;
};

/// Returns the unique type of `term` under `ctx`.
/// Throws UnboundVariable or TypeMismatch.
SemType typecheck(const Term& term, const TypingContext& ctx = {});

}  // namespace contsem
