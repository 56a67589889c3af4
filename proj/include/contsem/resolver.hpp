#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "contsem/formula.hpp"

namespace contsem {

/// Evaluates an environment to an ordered referent list: `::` prepends,
/// `++` concatenates left then right, and duplicates keep their first
/// occurrence.
std::vector<EntityTerm> eval_env(const EnvExpr& env);

/// Accessible referents at one sel site, most recent first.
struct AccessReport {
  std::size_t site_id;
  EnvExpr env;
  std::vector<EntityTerm> candidates;
};

/// One report per sel site, in site order. Candidates are the evaluated
/// environment ranked by recency: referents bound by an enclosing Ex come
/// first, innermost binder first; constants follow in environment order.
std::vector<AccessReport> report(const Formula& f);

/// `sel#<id> env=<expr> candidates=[a, b]`
std::string render(const AccessReport& r);

enum class ResolveStrategy { Symbolic, Recency };

/// Symbolic leaves `f` unchanged; Recency replaces every sel site with its
/// first candidate and throws EmptyEnvironment when a site has none.
Formula resolve(const Formula& f, ResolveStrategy strategy);

}  // namespace contsem
