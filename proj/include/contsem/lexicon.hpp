#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "contsem/sem_type.hpp"
#include "contsem/term.hpp"
#include "contsem/term_syntax.hpp"

namespace contsem {

/// A: plain environments. B: connective plus proper-noun and existential
/// environments. C: discourse relations (Coord/Sub) over the same shape.
enum class Profile { A, B, C };

std::string to_string(Profile p);
/// Accepts "A", "B", "C" (any case). Throws std::invalid_argument.
Profile parse_profile(std::string_view text);

enum class Category {
  ProperNoun,
  CommonNoun,
  TransitiveVerb,
  IntransitiveVerb,
  Determiner,
  Pronoun,
  Copula,
  Adjective,
  NegationAux,
};

std::string to_string(Category c);
/// Short names used by extension files: pnoun noun tverb iverb det pron copula adj neg.
Category parse_category(std::string_view text);

/// The profile's sentence type S.
SemType sentence_type(Profile p);
/// NP = (e>S)>S, noun = e>S, tverb = NP>NP>S, iverb = NP>S, det = noun>noun>S,
/// adj = noun>e>S, copula = adj>NP>S, neg = (NP>S)>NP>S.
SemType category_type(Category c, Profile p);

/// Type aliases for writing entries of profile `p`: the built-ins plus
/// k (connective), cont (continuation), s, np, n, vp, adj.
TypeAliases profile_aliases(Profile p);

struct LexEntry {
  std::string word;
  Category category;
  Profile profile;
  Term term;
};

/// Lowercases and drops apostrophes: "Doesn't" -> "doesnt".
std::string normalize_word(std::string_view word);

/// Immutable word store for one profile. Extensions return a new store.
class Lexicon {
 public:
  /// The shipped entries of `p`.
  static Lexicon standard(Profile p);

  Profile profile() const { return profile_; }

  /// Adds or replaces the entry for `e.word`, declaring its content constant.
  Lexicon with(LexEntry e) const;
  /// Replaces "doesnt" by the rejected negation variant.
  Lexicon with_rejected_negation() const;

  /// Looks a word up after normalize_word. Verbs also match with a trailing
  /// "s" or "es" removed or added ("owns" finds own, "see" finds sees).
  /// Throws UnknownWord.
  const LexEntry& lookup(std::string_view word) const;
  bool contains(std::string_view word) const;

  std::vector<LexEntry> entries() const;
  /// Predicates and entity constants used by the entries.
  const Signature& signature() const { return signature_; }

 private:
  explicit Lexicon(Profile p) : profile_(p) {}
  const LexEntry* find(const std::string& word) const;

  Profile profile_;
  std::map<std::string, LexEntry> entries_;
  Signature signature_;
};

/// The stored term of `word` in the standard lexicon of `p`. Throws UnknownWord.
Term entry(std::string_view word, Profile p);

/// Instantiates the category template of `p` with `word` as content
/// constant. Throws UnsupportedCategory for Determiner, Copula and
/// NegationAux, and std::invalid_argument for a reserved or malformed word.
LexEntry make_entry(Category c, const std::string& word, Profile p);

/// The accepted negation entry of `p`, or with `rejected` the variant that
/// keeps the continuation under the negation (profile A only; other profiles
/// throw ProfileMismatch). Profile C has no negation (UnsupportedCategory).
Term negation_variant(bool rejected, Profile p);

/// Reads `category word` lines ('#' starts a comment) into make_entry calls
/// on top of `base`. Throws SyntaxError with the line number as position.
Lexicon extend(const Lexicon& base, std::string_view text);

}  // namespace contsem
