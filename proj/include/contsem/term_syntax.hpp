#pragma once

#include <map>
#include <string>
#include <string_view>

#include "contsem/sem_type.hpp"
#include "contsem/term.hpp"

namespace contsem {

/// Named type abbreviations usable in type annotations. The built-in set is
/// kb, kc, sa, sb, sc; callers may add their own.
using TypeAliases = std::map<std::string, SemType, std::less<>>;
const TypeAliases& builtin_type_aliases();

/// Parses `e`, `t`, `g`, aliases, parentheses and right-associative `>`.
SemType parse_type(std::string_view text, const TypeAliases& aliases = builtin_type_aliases());

/// Parses the named lambda syntax (see docs/syntax.md) into a De Bruijn term.
/// Identifiers resolve to the nearest binder, then to `signature`.
/// Throws SyntaxError or UnknownIdentifier.
Term parse_term(std::string_view text, const Signature& signature = Signature::builtins(),
                const TypeAliases& aliases = builtin_type_aliases());

/// Prints `term` in the named syntax. Binders are named x1, x2, ... in
/// pre-order, so the output is canonical and parse_term(pretty(t)) == t.
std::string pretty(const Term& term);

}  // namespace contsem
