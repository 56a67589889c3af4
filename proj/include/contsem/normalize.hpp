#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "contsem/term.hpp"

namespace contsem {

inline constexpr std::size_t kDefaultMaxSteps = 100000;

/// Leftmost-outermost (normal) or leftmost-innermost (applicative) order.
enum class ReductionOrder { Normal, Applicative };

/// Shifts free indices >= cutoff by `delta`.
Term shift(const Term& term, long delta, std::size_t cutoff = 0);

/// Contracts `(\x. body) arg`: substitutes `arg` for index 0 in the body of `lam`.
Term apply_lambda(const Term& lam, const Term& arg);

/// One contraction step. Besides beta, the combinators reduce when saturated:
///   Coord a b -> b,  Sub a b -> a ++ b,
///   dual (&) -> (|),  dual (|) -> (&),  dual (dual c) -> c.
struct Contraction {
  Term result;
  /// Path from the root to the contracted redex: 'f' function, 'a' argument,
  /// 'b' abstraction body. Empty for the root.
  std::string position;
};
std::optional<Contraction> reduce_once(const Term& term, ReductionOrder order = ReductionOrder::Normal);

/// Reduces to normal form. Throws StepBudgetExceeded after `max_steps` contractions.
Term normalize(const Term& term, std::size_t max_steps = kDefaultMaxSteps,
               ReductionOrder order = ReductionOrder::Normal);

struct TraceStep {
  std::size_t index;  // 1-based
  std::string position;
  Term result;
};

/// The normal-order reduction sequence of `term`; empty when already normal.
std::vector<TraceStep> trace(const Term& term, std::size_t max_steps = kDefaultMaxSteps);

bool is_normal(const Term& term);

}  // namespace contsem
