#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contsem/discourse.hpp"
#include "contsem/lexicon.hpp"

namespace contsem {

/// A discourse file. Directives, one per line ('#' starts a comment):
///   profile A|B|C
///   lexicon <category> <word>
///   sentence <id> = <words>
///   discourse = <expr>          expr := unit (('.' | '.c' | '.s') expr)?
///                               unit := id | '(' expr ')'
///   symbolic
///   negation rejected
///   init = <term> ; <term> ...
///   const <name> : <type>
///   term = <term>
/// Connectives group to the right: `a .c b .s c` is `a .c (b .s c)`.
struct DslDocument {
  struct Sentence {
    std::string id;
    std::string text;
    std::size_t line;
  };
  struct Constant {
    std::string name;
    std::string type;
    std::size_t line;
  };
  template <class T>
  struct Located {
    T value;
    std::size_t line;
  };

  std::optional<Located<Profile>> profile;
  bool symbolic = false;
  bool rejected_negation = false;
  std::vector<Located<std::string>> lexicon;  // "category word"
  std::vector<Sentence> sentences;
  std::optional<Located<std::string>> discourse;
  std::optional<Located<std::string>> init;
  std::vector<Constant> constants;
  std::optional<Located<std::string>> term;
};

/// Throws SourceError.
DslDocument parse_document(std::string_view text);

/// The standard lexicon of `p` plus the document's lexicon lines and, when
/// requested, the rejected negation. Throws SourceError.
Lexicon document_lexicon(const DslDocument& doc, Profile p, bool rejected_negation);

/// Builds the discourse tree. With `symbolic`, identifiers without a
/// sentence become SymLeaf. Throws SourceError.
DiscourseTree document_tree(const DslDocument& doc, const Lexicon& lexicon, bool symbolic);

/// Signature of the document's `const` lines on top of the lexicon's.
Signature document_signature(const DslDocument& doc, const Lexicon& lexicon);

}  // namespace contsem
