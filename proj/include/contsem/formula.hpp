#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace contsem {

class EnvExpr;

/// Entity-denoting terms of a formula: constants, bound variables and
/// anaphoric `sel` sites.
class EntityTerm {
 public:
  enum class Kind { Const, Var, Sel };

  static EntityTerm constant(std::string name);
  static EntityTerm variable(std::string name);
  static EntityTerm sel(EnvExpr env, std::size_t site);

  Kind kind() const;
  /// Const or Var name.
  const std::string& name() const;
  const EnvExpr& env() const;
  std::size_t site() const;

  /// Strict structural equality (names and site ids included).
  friend bool operator==(const EntityTerm& a, const EntityTerm& b);
  friend bool operator!=(const EntityTerm& a, const EntityTerm& b) { return !(a == b); }

 private:
  struct Node;
  explicit EntityTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Referent environments: nil, `head::tail` and `left ++ right`.
class EnvExpr {
 public:
  enum class Kind { Nil, Cons, Union };

  static EnvExpr nil();
  static EnvExpr cons(EntityTerm head, EnvExpr tail);
  static EnvExpr union_of(EnvExpr left, EnvExpr right);
  /// Builds `r0::r1::...::nil`.
  static EnvExpr list(const std::vector<EntityTerm>& referents);

  Kind kind() const;
  const EntityTerm& head() const;
  const EnvExpr& tail() const;
  const EnvExpr& left() const;
  const EnvExpr& right() const;

  friend bool operator==(const EnvExpr& a, const EnvExpr& b);
  friend bool operator!=(const EnvExpr& a, const EnvExpr& b) { return !(a == b); }

 private:
  struct Node;
  explicit EnvExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// First-order logical forms read off normal-form terms of type t.
class Formula {
 public:
  enum class Kind { Top, Bot, Not, And, Or, Exists, Atom };

  static Formula top();
  static Formula bot();
  static Formula negation(Formula operand);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula exists(std::string var, Formula body);
  static Formula atom(std::string predicate, std::vector<EntityTerm> args);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  /// Operand of Not.
  const Formula& operand() const;
  const Formula& left() const;
  const Formula& right() const;
  const std::string& var() const;
  const Formula& body() const;
  const std::string& predicate() const;
  const std::vector<EntityTerm>& args() const;

  /// Strict structural equality.
  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Equality up to renaming of bound variables, ignoring sel site ids.
bool alpha_equivalent(const Formula& a, const Formula& b);

/// Variables occurring free in `f`, including inside sel environments.
std::vector<std::string> free_variables(const Formula& f);
bool occurs_free(const std::string& var, const Formula& f);

/// Every sel site of `f` in left-to-right order.
std::vector<EntityTerm> sel_sites(const Formula& f);

/// Renumbers sel sites 0, 1, ... in left-to-right order.
Formula renumber_sites(const Formula& f);

}  // namespace contsem
