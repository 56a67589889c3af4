#include "contsem/logic.hpp"
#include "contsem/resolver.hpp"

namespace contsem {

namespace {

using K = Formula::Kind;

Formula step(const Formula& f);

Formula binary(K kind, Formula l, Formula r) {
  return kind == K::And ? Formula::conjunction(std::move(l), std::move(r))
                        : Formula::disjunction(std::move(l), std::move(r));
}

Formula flat_sites(const Formula& f) {
  std::vector<EntityTerm> args;
  for (const auto& a : f.args()) {
    args.push_back(a.kind() == EntityTerm::Kind::Sel
                       ? EntityTerm::sel(EnvExpr::list(eval_env(a.env())), a.site())
                       : a);
  }
  return Formula::atom(f.predicate(), std::move(args));
}

Formula step_not(const Formula& x) {
  switch (x.kind()) {
    case K::Top:
      return Formula::bot();
    case K::Bot:
      return Formula::top();
    case K::Not:
      return x.operand();
    case K::And:
      return step(Formula::disjunction(step(Formula::negation(x.left())), step(Formula::negation(x.right()))));
    case K::Or:
      return step(Formula::conjunction(step(Formula::negation(x.left())), step(Formula::negation(x.right()))));
    default:
      return Formula::negation(x);
  }
}

Formula step_binary(K kind, const Formula& a, const Formula& b) {
  const K unit = kind == K::And ? K::Top : K::Bot;
  const K zero = kind == K::And ? K::Bot : K::Top;
  if (a.is(unit)) return b;
  if (b.is(unit)) return a;
  if (a.is(zero) || b.is(zero)) return zero == K::Top ? Formula::top() : Formula::bot();
  if (kind == K::And) {
    for (K inner : {K::Or, K::And}) {
      if (a.is(inner) && b.is(inner) && alpha_equivalent(a.right(), b.right())) {
        Formula joined = step(Formula::conjunction(a.left(), b.left()));
        return step(binary(inner, std::move(joined), a.right()));
      }
    }
  }
  return binary(kind, a, b);
}

Formula step_exists(const std::string& y, const Formula& body) {
  if (!occurs_free(y, body)) return body;
  if (body.is(K::And) || body.is(K::Or)) {
    const Formula& l = body.left();
    const Formula& r = body.right();
    if (!occurs_free(y, r)) return step(binary(body.kind(), step(Formula::exists(y, l)), r));
    if (!occurs_free(y, l)) return step(binary(body.kind(), l, step(Formula::exists(y, r))));
  }
  return Formula::exists(y, body);
}

// Rewrites at the root of `f`, whose children are already simplified.
Formula step(const Formula& f) {
  switch (f.kind()) {
    case K::Not:
      return step_not(f.operand());
    case K::And:
    case K::Or:
      return step_binary(f.kind(), f.left(), f.right());
    case K::Exists:
      return step_exists(f.var(), f.body());
    case K::Atom:
      return flat_sites(f);
    default:
      return f;
  }
}

Formula pass(const Formula& f) {
  switch (f.kind()) {
    case K::Not:
      return step(Formula::negation(pass(f.operand())));
    case K::And:
    case K::Or:
      return step(binary(f.kind(), pass(f.left()), pass(f.right())));
    case K::Exists:
      return step(Formula::exists(f.var(), pass(f.body())));
    default:
      return step(f);
  }
}

}  // namespace

Formula simplify(const Formula& f) {
  Formula cur = f;
  for (;;) {
    Formula next = pass(cur);
    if (next == cur) break;
    cur = std::move(next);
  }
  return renumber_sites(cur);
}

}  // namespace contsem
