#pragma once

#include <initializer_list>
#include <memory>
#include <string>

namespace contsem {

/// Semantic types: entities (e), propositions (t), referent environments (g)
/// and arrows. Immutable and cheap to copy.
class SemType {
 public:
  enum class Kind { E, T, G, Arrow };

  static SemType e();
  static SemType t();
  static SemType g();
  static SemType arrow(SemType domain, SemType codomain);

  /// Right-folds `parts` into an arrow chain: {a, b, c} -> a>b>c.
  static SemType chain(std::initializer_list<SemType> parts);

  Kind kind() const { return node_->kind; }
  bool is_arrow() const { return node_->kind == Kind::Arrow; }
  const SemType& domain() const;
  const SemType& codomain() const;

  /// Compact ASCII rendering with `>` arrows, e.g. `g>(g>t)>t`.
  std::string str() const;

  friend bool operator==(const SemType& a, const SemType& b);
  friend bool operator!=(const SemType& a, const SemType& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::shared_ptr<const SemType> domain;
    std::shared_ptr<const SemType> codomain;
  };
  explicit SemType(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Derived abbreviations.
SemType kappa_b();     // t>t>t
SemType kappa_c();     // g>g>g
SemType sentence_a();  // g>(g>t)>t
SemType sentence_b();  // kb>g>g>(kb>g>g>t)>t
SemType sentence_c();  // kc>g>g>(kc>g>g>t)>t

}  // namespace contsem
