#include "contsem/normalize.hpp"

#include <stdexcept>

#include "contsem/errors.hpp"

namespace contsem {

Term shift(const Term& term, long delta, std::size_t cutoff) {
  switch (term.kind()) {
    case Term::Kind::Var:
      if (term.index() < cutoff) return term;
      if (delta < 0 && term.index() < static_cast<std::size_t>(-delta))
        throw std::logic_error("shift would produce a negative index");
      return Term::var(static_cast<std::size_t>(static_cast<long>(term.index()) + delta));
    case Term::Kind::Lam:
      return Term::lam(term.annotation(), shift(term.body(), delta, cutoff + 1));
    case Term::Kind::App:
      return Term::app(shift(term.fun(), delta, cutoff), shift(term.arg(), delta, cutoff));
    case Term::Kind::Const:
      return term;
  }
  return term;
}

namespace {

// Replaces index `depth` by `value` (closed over the binders outside the
// redex), lowering the free indices above it by one.
Term substitute(const Term& term, std::size_t depth, const Term& value) {
  switch (term.kind()) {
    case Term::Kind::Var:
      if (term.index() == depth) return shift(value, static_cast<long>(depth));
      if (term.index() > depth) return Term::var(term.index() - 1);
      return term;
    case Term::Kind::Lam:
      return Term::lam(term.annotation(), substitute(term.body(), depth + 1, value));
    case Term::Kind::App:
      return Term::app(substitute(term.fun(), depth, value), substitute(term.arg(), depth, value));
    case Term::Kind::Const:
      return term;
  }
  return term;
}

// Contracts `term` if it is itself a redex.
std::optional<Term> contract(const Term& term) {
  if (!term.is_app()) return std::nullopt;
  const Term& fun = term.fun();
  if (fun.is_lam()) return apply_lambda(fun, term.arg());

  if (fun.is_const(builtin::kDual)) {
    const Term& c = term.arg();
    if (c.is_const(builtin::kAnd)) return builtin::or_();
    if (c.is_const(builtin::kOr)) return builtin::and_();
    if (c.is_app() && c.fun().is_const(builtin::kDual)) return c.arg();
    return std::nullopt;
  }
  if (fun.is_app()) {
    const Term& head = fun.fun();
    if (head.is_const(builtin::kCoord)) return term.arg();
    if (head.is_const(builtin::kSub)) return Term::apply(builtin::union_(), {fun.arg(), term.arg()});
  }
  return std::nullopt;
}

struct Step {
  Term result;
  std::string position;
};

std::optional<Step> step_normal(const Term& term) {
  if (auto here = contract(term)) return Step{std::move(*here), ""};
  switch (term.kind()) {
    case Term::Kind::Lam:
      if (auto inner = step_normal(term.body())) {
        return Step{Term::lam(term.annotation(), std::move(inner->result)), "b" + inner->position};
      }
      return std::nullopt;
    case Term::Kind::App:
      if (auto inner = step_normal(term.fun())) {
        return Step{Term::app(std::move(inner->result), term.arg()), "f" + inner->position};
      }
      if (auto inner = step_normal(term.arg())) {
        return Step{Term::app(term.fun(), std::move(inner->result)), "a" + inner->position};
      }
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::optional<Step> step_applicative(const Term& term) {
  switch (term.kind()) {
    case Term::Kind::Lam:
      if (auto inner = step_applicative(term.body())) {
        return Step{Term::lam(term.annotation(), std::move(inner->result)), "b" + inner->position};
      }
      return std::nullopt;
    case Term::Kind::App:
      if (auto inner = step_applicative(term.fun())) {
        return Step{Term::app(std::move(inner->result), term.arg()), "f" + inner->position};
      }
      if (auto inner = step_applicative(term.arg())) {
        return Step{Term::app(term.fun(), std::move(inner->result)), "a" + inner->position};
      }
      break;
    default:
      return std::nullopt;
  }
  if (auto here = contract(term)) return Step{std::move(*here), ""};
  return std::nullopt;
}

}  // namespace

Term apply_lambda(const Term& lam, const Term& arg) {
  if (!lam.is_lam()) throw std::invalid_argument("apply_lambda needs an abstraction");
  return substitute(lam.body(), 0, arg);
}

std::optional<Contraction> reduce_once(const Term& term, ReductionOrder order) {
  auto step = order == ReductionOrder::Normal ? step_normal(term) : step_applicative(term);
  if (!step) return std::nullopt;
  return Contraction{std::move(step->result), std::move(step->position)};
}

Term normalize(const Term& term, std::size_t max_steps, ReductionOrder order) {
  Term current = term;
  for (std::size_t steps = 0;; ++steps) {
    auto next = reduce_once(current, order);
    if (!next) return current;
    if (steps == max_steps) throw StepBudgetExceeded(max_steps);
    current = std::move(next->result);
  }
}

std::vector<TraceStep> trace(const Term& term, std::size_t max_steps) {
  std::vector<TraceStep> steps;
  Term current = term;
  while (auto next = reduce_once(current, ReductionOrder::Normal)) {
    if (steps.size() == max_steps) throw StepBudgetExceeded(max_steps);
    current = next->result;
    steps.push_back(TraceStep{steps.size() + 1, std::move(next->position), current});
  }
  return steps;
}

bool is_normal(const Term& term) { return !step_normal(term).has_value(); }

}  // namespace contsem
