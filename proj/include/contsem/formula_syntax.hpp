#pragma once

#include <string>
#include <string_view>

#include "contsem/formula.hpp"
#include "json.hpp"

namespace contsem {

/// Renders a formula with `~ & | Ex top bot sel(...) :: ++ nil`.
/// Atoms print as `p a b`, or `p(a, b)` when an argument is a sel site.
std::string to_text(const Formula& f);
std::string to_text(const EntityTerm& t);
std::string to_text(const EnvExpr& env);

/// Parses the text produced by to_text. Identifiers bound by an enclosing
/// `Ex` are variables, all others are constants. Sel sites are numbered in
/// reading order. Throws SyntaxError.
Formula parse_formula(std::string_view text);

/// Structured rendering with explicit node tags and sel site ids.
nlohmann::json to_json(const Formula& f);
nlohmann::json to_json(const EntityTerm& t);
nlohmann::json to_json(const EnvExpr& env);

}  // namespace contsem
