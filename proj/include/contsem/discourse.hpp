#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contsem/formula.hpp"
#include "contsem/lexicon.hpp"
#include "contsem/normalize.hpp"
#include "contsem/term.hpp"

namespace contsem {

struct NounPhrase {
  enum class Kind { Proper, Det, Pron };
  Kind kind;
  std::string word;
  std::string noun;  // Det only
};

/// `subject [doesnt] verb [object]` or `subject [doesnt] is adjective`.
struct SentenceAST {
  enum class Predicate { Verb, CopulaAdj };
  NounPhrase subject;
  Predicate predicate = Predicate::Verb;
  std::string verb;  // verb, or the copula word
  std::optional<NounPhrase> object;
  std::string adjective;
  bool negated = false;
};

/// Splits `john doesnt own (a car)` into a SentenceAST, classifying words by
/// their lexicon category. A determiner phrase may omit its parentheses.
/// Throws SyntaxError (word index as position) and UnknownWord.
SentenceAST parse_sentence(std::string_view text, const Lexicon& lexicon);

/// Assembles the sentence term without normalizing it: `verb object subject`,
/// `is adjective subject`, and under negation `doesnt (verb object) subject`.
/// Throws UnknownWord and ArityMismatch.
Term build_sentence(const SentenceAST& ast, const Lexicon& lexicon);

class DiscourseTree {
 public:
  enum class Kind { Leaf, SymLeaf, Seq, Coord, Sub };

  static DiscourseTree leaf(SentenceAST sentence);
  static DiscourseTree symbol(std::string name);
  static DiscourseTree seq(DiscourseTree left, DiscourseTree right);
  static DiscourseTree coord(DiscourseTree left, DiscourseTree right);
  static DiscourseTree sub(DiscourseTree left, DiscourseTree right);

  Kind kind() const { return kind_; }
  const SentenceAST& sentence() const { return *sentence_; }
  const std::string& name() const { return name_; }
  const DiscourseTree& left() const { return *left_; }
  const DiscourseTree& right() const { return *right_; }
  bool symbolic() const;

 private:
  DiscourseTree() = default;
  static DiscourseTree node(Kind k, DiscourseTree left, DiscourseTree right);

  Kind kind_ = Kind::Leaf;
  std::shared_ptr<const SentenceAST> sentence_;
  std::string name_;
  std::shared_ptr<const DiscourseTree> left_;
  std::shared_ptr<const DiscourseTree> right_;
};

std::string to_string(DiscourseTree::Kind k);

/// Applies the profile's composition rule at every inner node:
///   A  s1 . s2   = \e f. s1 e (\e'. s2 e' f)
///   B  s1 . s2   = \c e1 e2 f. s1 c e1 e2 (\c' e1' e2'. s2 c' e1' e2' f)
///   C  s1 .s s2  = \c e1 e2 f. s1 c e1 e2 (\c' e1' e2'. s2 Sub e1' (c e1 e2) f)
///   C  s1 .c s2  = the same with Coord
/// The result is not normalized. SymLeaf names become constants of the
/// sentence type. In profile C a concrete leaf S is wrapped as
///   \c e1 e2 f. S c nil (e1 ++ e2) (\c' e1' e2'. f c' e1' e2)
/// so the unit hands on only the referents it introduced itself.
/// Throws ProfileMismatch.
Term compose(const DiscourseTree& tree, const Lexicon& lexicon);

/// Arguments a discourse term is applied to before reading off its formula.
struct InitialArgs {
  std::vector<Term> args;

  /// A: (nil, \e. top); B: (&, nil, nil, \c e1 e2. ~(c top bot));
  /// C: (Coord, nil, nil, \c e1 e2. top).
  static InitialArgs defaults(Profile p);
  /// Parses `t1 ; t2 ; ...` with the profile's type aliases and checks the
  /// components against the sentence type. Throws SyntaxError, TypeMismatch
  /// or ArityMismatch.
  static InitialArgs parse(std::string_view text, Profile p, const Signature& signature);
};

struct Interpretation {
  Term composed;
  Term normal_form;  // of the composed term
  Formula raw;
  Formula simplified;
};

/// normalize(compose(tree) applied to init), then reify and simplify.
/// Throws on symbolic trees and propagates pipeline errors.
Interpretation interpret(const DiscourseTree& tree, const Lexicon& lexicon,
                         const InitialArgs& init,
                         std::size_t max_steps = kDefaultMaxSteps);

/// Normal form of a profile C tree whose leaves are all symbolic.
/// Throws ProfileMismatch.
Term expand_symbolic(const DiscourseTree& tree, std::size_t max_steps = kDefaultMaxSteps);

}  // namespace contsem
