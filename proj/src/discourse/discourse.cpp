#include "contsem/discourse.hpp"

#include <cctype>

#include "contsem/errors.hpp"
#include "contsem/logic.hpp"
#include "contsem/term_syntax.hpp"

namespace contsem {

namespace {

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) != 0) {
      flush();
    } else if (ch == '(' || ch == ')') {
      flush();
      out.emplace_back(1, ch);
    } else {
      cur += ch;
    }
  }
  flush();
  return out;
}

class SentenceParser {
 public:
  SentenceParser(std::string_view text, const Lexicon& lexicon)
      : words_(split_words(text)), lexicon_(lexicon) {}

  SentenceAST run() {
    SentenceAST ast;
    ast.subject = noun_phrase("a subject");
    if (!at_end() && category(peek()) == Category::NegationAux) {
      advance();
      ast.negated = true;
    }
    std::string word = expect_word("a verb");
    if (category(word) == Category::Copula) {
      ast.predicate = SentenceAST::Predicate::CopulaAdj;
      ast.verb = word;
      ast.adjective = expect_word("an adjective");
    } else {
      ast.verb = word;
      if (!at_end()) ast.object = noun_phrase("an object");
    }
    if (!at_end()) throw SyntaxError(pos_, "unexpected '" + peek() + "'");
    return ast;
  }

 private:
  bool at_end() const { return pos_ >= words_.size(); }
  const std::string& peek() const { return words_[pos_]; }
  void advance() { ++pos_; }

  std::string expect_word(const char* what) {
    if (at_end() || peek() == "(" || peek() == ")") {
      throw SyntaxError(pos_, std::string("expected ") + what);
    }
    return words_[pos_++];
  }

  Category category(const std::string& word) const { return lexicon_.lookup(word).category; }

  NounPhrase noun_phrase(const char* what) {
    if (!at_end() && peek() == "(") {
      advance();
      NounPhrase np = noun_phrase(what);
      if (at_end() || peek() != ")") throw SyntaxError(pos_, "expected ')'");
      advance();
      return np;
    }
    std::string word = expect_word(what);
    switch (category(word)) {
      case Category::ProperNoun:
        return NounPhrase{NounPhrase::Kind::Proper, word, ""};
      case Category::Pronoun:
        return NounPhrase{NounPhrase::Kind::Pron, word, ""};
      case Category::Determiner:
        return NounPhrase{NounPhrase::Kind::Det, word, expect_word("a noun")};
      default:
        throw SyntaxError(pos_ - 1, "'" + word + "' cannot start a noun phrase");
    }
  }

  std::vector<std::string> words_;
  const Lexicon& lexicon_;
  std::size_t pos_ = 0;
};

const LexEntry& expect_category(const Lexicon& lexicon, const std::string& word, Category c) {
  const LexEntry& e = lexicon.lookup(word);
  if (e.category != c) {
    throw ArityMismatch("'" + word + "' is a " + to_string(e.category) + ", expected " + to_string(c));
  }
  return e;
}

Term noun_phrase_term(const NounPhrase& np, const Lexicon& lexicon) {
  switch (np.kind) {
    case NounPhrase::Kind::Proper:
      return expect_category(lexicon, np.word, Category::ProperNoun).term;
    case NounPhrase::Kind::Pron:
      return expect_category(lexicon, np.word, Category::Pronoun).term;
    case NounPhrase::Kind::Det:
      return Term::app(expect_category(lexicon, np.word, Category::Determiner).term,
                       expect_category(lexicon, np.noun, Category::CommonNoun).term);
  }
  throw std::logic_error("unknown noun phrase kind");
}

// Composition combinators, \s1 s2. <rule>.
const char* combinator_text(DiscourseTree::Kind k, Profile p) {
  switch (p) {
    case Profile::A:
      return R"(\s1:s s2:s e:g f:cont. s1 e (\d:g. s2 d f))";
    case Profile::B:
      return R"(\s1:s s2:s c:k e1:g e2:g f:cont. s1 c e1 e2 (\c2:k d1:g d2:g. s2 c2 d1 d2 f))";
    case Profile::C:
      return k == DiscourseTree::Kind::Sub
                 ? R"(\s1:s s2:s c:k e1:g e2:g f:cont. s1 c e1 e2 (\c2:k d1:g d2:g. s2 Sub d1 (c e1 e2) f))"
                 : R"(\s1:s s2:s c:k e1:g e2:g f:cont. s1 c e1 e2 (\c2:k d1:g d2:g. s2 Coord d1 (c e1 e2) f))";
  }
  return "";
}

const char* const kLeafWrapperC =
    R"(\S:s c:k e1:g e2:g f:cont. S c nil (e1 ++ e2) (\c2:k d1:g d2:g. f c2 d1 e2))";

Term parse_in(const char* text, Profile p) { return parse_term(text, Signature(), profile_aliases(p)); }

}  // namespace

SentenceAST parse_sentence(std::string_view text, const Lexicon& lexicon) {
  return SentenceParser(text, lexicon).run();
}

Term build_sentence(const SentenceAST& ast, const Lexicon& lexicon) {
  Term subject = noun_phrase_term(ast.subject, lexicon);
  Term vp = [&] {
    if (ast.predicate == SentenceAST::Predicate::CopulaAdj) {
      if (ast.object) throw ArityMismatch("the copula takes no object");
      return Term::app(expect_category(lexicon, ast.verb, Category::Copula).term,
                       expect_category(lexicon, ast.adjective, Category::Adjective).term);
    }
    const LexEntry& verb = lexicon.lookup(ast.verb);
    if (verb.category == Category::TransitiveVerb) {
      if (!ast.object) throw ArityMismatch("transitive verb '" + ast.verb + "' needs an object");
      return Term::app(verb.term, noun_phrase_term(*ast.object, lexicon));
    }
    if (verb.category == Category::IntransitiveVerb) {
      if (ast.object) throw ArityMismatch("intransitive verb '" + ast.verb + "' takes no object");
      return verb.term;
    }
    throw ArityMismatch("'" + ast.verb + "' is a " + to_string(verb.category) + ", expected a verb");
  }();
  if (ast.negated) {
    const Term& neg = lexicon.lookup("doesnt").term;
    return Term::apply(neg, {vp, subject});
  }
  return Term::app(vp, subject);
}

DiscourseTree DiscourseTree::leaf(SentenceAST sentence) {
  DiscourseTree t;
  t.kind_ = Kind::Leaf;
  t.sentence_ = std::make_shared<const SentenceAST>(std::move(sentence));
  return t;
}

DiscourseTree DiscourseTree::symbol(std::string name) {
  DiscourseTree t;
  t.kind_ = Kind::SymLeaf;
  t.name_ = std::move(name);
  return t;
}

DiscourseTree DiscourseTree::node(Kind k, DiscourseTree left, DiscourseTree right) {
  DiscourseTree t;
  t.kind_ = k;
  t.left_ = std::make_shared<const DiscourseTree>(std::move(left));
  t.right_ = std::make_shared<const DiscourseTree>(std::move(right));
  return t;
}

DiscourseTree DiscourseTree::seq(DiscourseTree l, DiscourseTree r) { return node(Kind::Seq, std::move(l), std::move(r)); }
DiscourseTree DiscourseTree::coord(DiscourseTree l, DiscourseTree r) { return node(Kind::Coord, std::move(l), std::move(r)); }
DiscourseTree DiscourseTree::sub(DiscourseTree l, DiscourseTree r) { return node(Kind::Sub, std::move(l), std::move(r)); }

bool DiscourseTree::symbolic() const {
  switch (kind_) {
    case Kind::Leaf:
      return false;
    case Kind::SymLeaf:
      return true;
    default:
      return left_->symbolic() || right_->symbolic();
  }
}

std::string to_string(DiscourseTree::Kind k) {
  switch (k) {
    case DiscourseTree::Kind::Leaf: return "Leaf";
    case DiscourseTree::Kind::SymLeaf: return "SymLeaf";
    case DiscourseTree::Kind::Seq: return "Seq";
    case DiscourseTree::Kind::Coord: return "CoordN";
    case DiscourseTree::Kind::Sub: return "SubN";
  }
  return "?";
}

Term compose(const DiscourseTree& tree, const Lexicon& lexicon) {
  const Profile p = lexicon.profile();
  switch (tree.kind()) {
    case DiscourseTree::Kind::Leaf: {
      Term s = build_sentence(tree.sentence(), lexicon);
      return p == Profile::C ? apply_lambda(parse_in(kLeafWrapperC, p), s) : s;
    }
    case DiscourseTree::Kind::SymLeaf:
      return Term::constant(tree.name(), sentence_type(p));
    case DiscourseTree::Kind::Seq:
    case DiscourseTree::Kind::Coord:
    case DiscourseTree::Kind::Sub: {
      const bool relational = tree.kind() != DiscourseTree::Kind::Seq;
      if (relational != (p == Profile::C)) throw ProfileMismatch(to_string(tree.kind()), to_string(p));
      Term rule = parse_in(combinator_text(tree.kind(), p), p);
      Term left = compose(tree.left(), lexicon);
      Term right = compose(tree.right(), lexicon);
      return apply_lambda(apply_lambda(rule, left), right);
    }
  }
  throw std::logic_error("unknown discourse node");
}

InitialArgs InitialArgs::defaults(Profile p) {
  switch (p) {
    case Profile::A:
      return parse("nil ; \\e:g. top", p, Signature());
    case Profile::B:
      return parse("(&) ; nil ; nil ; \\c:k e1:g e2:g. ~(c top bot)", p, Signature());
    case Profile::C:
      return parse("Coord ; nil ; nil ; \\c:k e1:g e2:g. top", p, Signature());
  }
  return {};
}

InitialArgs InitialArgs::parse(std::string_view text, Profile p, const Signature& signature) {
  InitialArgs out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    try {
      out.args.push_back(parse_term(text.substr(start, end - start), signature, profile_aliases(p)));
    } catch (const SyntaxError& e) {
      throw SyntaxError(start + e.position(), e.what());
    }
    start = end + 1;
  }
  SemType expected = sentence_type(p);
  for (std::size_t i = 0; i < out.args.size(); ++i) {
    if (!expected.is_arrow()) throw ArityMismatch("too many initial arguments");
    SemType found = typecheck(out.args[i]);
    if (found != expected.domain()) {
      throw TypeMismatch(expected.domain().str(), found.str(), "initial argument " + std::to_string(i + 1));
    }
    expected = expected.codomain();
  }
  if (expected != SemType::t()) {
    throw ArityMismatch("expected " + std::to_string(p == Profile::A ? 2 : 4) + " initial arguments");
  }
  return out;
}

Interpretation interpret(const DiscourseTree& tree, const Lexicon& lexicon, const InitialArgs& init,
                         std::size_t max_steps) {
  if (tree.symbolic()) throw Error("symbolic discourse units cannot be interpreted");
  Term composed = compose(tree, lexicon);
  Term normal = normalize(composed, max_steps);
  Term applied = normalize(Term::apply(normal, init.args), max_steps);
  Formula raw = reify(applied);
  return Interpretation{composed, normal, raw, simplify(raw)};
}

Term expand_symbolic(const DiscourseTree& tree, std::size_t max_steps) {
  return normalize(compose(tree, Lexicon::standard(Profile::C)), max_steps);
}

}  // namespace contsem
