#pragma once

#include <cstddef>

#include "contsem/formula.hpp"
#include "contsem/term.hpp"

namespace contsem {

/// Reads a closed, normal-form term of type t as a formula. Bound variables
/// are named y, z, w, v, u, y1, z1, ... in binder order; sel sites are numbered
/// left to right. Throws NotReifiable when a subterm leaves the fragment
/// (e.g. a free connective or continuation variable).
Formula reify(const Term& term);

/// Applies the simplification rules bottom-up to a fixed point:
///   - units: A&top, top&A -> A; A|bot, bot|A -> A; A&bot, bot&A -> bot;
///     A|top, top|A -> top; ~top -> bot; ~bot -> top
///   - double negation: ~~A -> A
///   - De Morgan over & and |; never through Ex
///   - shared-tail fusion: (A|K)&(B|K) -> (A&B)|K and (A&K)&(B&K) -> (A&B)&K,
///     K compared up to bound renaming and site ids
///   - quantifier scope: Ex y.(A op B) -> (Ex y.A) op B when y is not free in B
///     (and symmetrically); Ex y.A -> A when y is not free in A
///   - environments inside sel(...) evaluated to a plain list
/// Sel sites are renumbered left to right afterwards.
Formula simplify(const Formula& f);

enum class OracleMode {
  Auto,        // exhaustive when within bounds, sampled otherwise
  Exhaustive,  // throws SignatureTooLarge beyond the bounds
  Sampled,
};

/// Number of random interpretations checked in sampled mode.
inline constexpr std::size_t kOracleSamples = 10000;

/// Model-checks f1 <-> f2 over every interpretation on an entity domain of
/// `domain_size` elements (1..4). Predicates range over all truth tables,
/// constants over all elements. A sel site becomes an uninterpreted function
/// of the variables in its evaluated environment, shared between sites whose
/// environments evaluate to the same shape. Exhaustive mode needs arity <= 2,
/// at most 6 predicate symbols and at most 2^20 interpretations.
bool logically_equiv(const Formula& f1, const Formula& f2, std::size_t domain_size,
                     OracleMode mode = OracleMode::Auto);

}  // namespace contsem
