#include "doctest.h"

#include "contsem/discourse.hpp"
#include "contsem/errors.hpp"
#include "contsem/formula_syntax.hpp"
#include "contsem/logic.hpp"
#include "contsem/resolver.hpp"
#include "contsem/term_syntax.hpp"

using namespace contsem;

namespace {

DiscourseTree leaf(const char* text, const Lexicon& lex) { return DiscourseTree::leaf(parse_sentence(text, lex)); }

Signature symbols() {
  Signature s;
  for (const char* n : {"s1", "s2", "s3"}) s.declare(n, sentence_c());
  return s;
}

Term expected_c(const char* text) { return parse_term(text, symbols(), profile_aliases(Profile::C)); }

DiscourseTree sym(const char* a, char r1, const char* b, char r2, const char* c) {
  auto join = [](char r, DiscourseTree l, DiscourseTree rt) {
    return r == 'c' ? DiscourseTree::coord(std::move(l), std::move(rt)) : DiscourseTree::sub(std::move(l), std::move(rt));
  };
  return join(r1, DiscourseTree::symbol(a), join(r2, DiscourseTree::symbol(b), DiscourseTree::symbol(c)));
}

}  // namespace

TEST_SUITE("discourse") {
  TEST_CASE("parse_sentence") {
    Lexicon lex = Lexicon::standard(Profile::B);
    SentenceAST s = parse_sentence("john doesnt own (a car)", lex);
    CHECK(s.subject.kind == NounPhrase::Kind::Proper);
    CHECK(s.negated);
    CHECK(s.verb == "own");
    REQUIRE(s.object.has_value());
    CHECK(s.object->kind == NounPhrase::Kind::Det);
    CHECK(s.object->noun == "car");
    SentenceAST t = parse_sentence("It is red", lex);
    CHECK(t.subject.kind == NounPhrase::Kind::Pron);
    CHECK(t.predicate == SentenceAST::Predicate::CopulaAdj);
    CHECK(t.adjective == "red");
    CHECK(parse_sentence("john owns a car", lex).object->noun == "car");
    CHECK_THROWS_AS(build_sentence(parse_sentence("john owns (a truck)", lex), lex), UnknownWord);
    CHECK_THROWS_AS(parse_sentence("mary owns (a car)", lex), UnknownWord);
    CHECK_THROWS_AS(parse_sentence("john owns (a car", lex), SyntaxError);
    CHECK_THROWS_AS(parse_sentence("", lex), SyntaxError);
  }

  TEST_CASE("build_sentence") {
    Lexicon a = Lexicon::standard(Profile::A);
    Term loves = build_sentence(parse_sentence("john loves (a woman)", a), a);
    CHECK(typecheck(loves) == sentence_a());
    CHECK(normalize(loves) ==
          parse_term(R"(\e:g phi:g>t. Ex y. woman y & love j y & phi (y::e))", a.signature()));

    Lexicon b = Lexicon::standard(Profile::B);
    Term it = normalize(build_sentence(parse_sentence("it is red", b), b));
    CHECK(typecheck(it) == sentence_b());
    CHECK(pretty(it).find("red (sel (x2 ++ x3))") != std::string::npos);

    SentenceAST bad = parse_sentence("john owns (a car)", b);
    bad.object.reset();
    CHECK_THROWS_AS(build_sentence(bad, b), ArityMismatch);
    CHECK_THROWS_AS(build_sentence(parse_sentence("john owns", b), b), ArityMismatch);
    CHECK_THROWS_AS(parse_sentence("john is red (a car)", b), SyntaxError);
  }

  TEST_CASE("sequencing before normalization") {
    Lexicon a = Lexicon::standard(Profile::A);
    DiscourseTree d = DiscourseTree::seq(leaf("john loves (a woman)", a), leaf("it is red", a));
    Term s1 = build_sentence(d.left().sentence(), a);
    Term s2 = build_sentence(d.right().sentence(), a);
    // \e f. s1 e (\e'. s2 e' f)
    Term expected = Term::lam(SemType::g(), Term::lam(SemType::arrow(SemType::g(), SemType::t()),
        Term::apply(s1, {Term::var(1), Term::lam(SemType::g(), Term::apply(s2, {Term::var(0), Term::var(1)}))})));
    CHECK(normalize(compose(d, a)) == normalize(expected));
    CHECK(typecheck(compose(d, a)) == sentence_a());
  }

  TEST_CASE("tree kinds per profile") {
    Lexicon b = Lexicon::standard(Profile::B);
    DiscourseTree coord = DiscourseTree::coord(leaf("john owns (a car)", b), leaf("it is red", b));
    CHECK_THROWS_AS(compose(coord, b), ProfileMismatch);
    Lexicon c = Lexicon::standard(Profile::C);
    DiscourseTree seq = DiscourseTree::seq(leaf("john owns (a car)", c), leaf("it is red", c));
    CHECK_THROWS_AS(compose(seq, c), ProfileMismatch);
    CHECK(to_string(DiscourseTree::Kind::Coord) == "CoordN");
    CHECK(DiscourseTree::coord(DiscourseTree::symbol("s1"), leaf("it is red", c)).symbolic());
  }

  TEST_CASE("symbolic expansions") {
    const char* head = R"(\c:kc e1:g e2:g f:kc>g>g>t. s1 c e1 e2 (\c1:kc d1:g d2:g. s2 )";
    CHECK(expand_symbolic(sym("s1", 'c', "s2", 'c', "s3")) ==
          expected_c((std::string(head) + R"(Coord d1 (c e1 e2) (\c2:kc g1:g g2:g. s3 Coord g1 (c e1 e2) f)))").c_str()));
    CHECK(expand_symbolic(sym("s1", 'c', "s2", 's', "s3")) ==
          expected_c((std::string(head) + R"(Coord d1 (c e1 e2) (\c2:kc g1:g g2:g. s3 Sub g1 (c e1 e2) f)))").c_str()));
    CHECK(expand_symbolic(sym("s1", 's', "s2", 'c', "s3")) ==
          expected_c((std::string(head) + R"(Sub d1 (c e1 e2) (\c2:kc g1:g g2:g. s3 Coord g1 (d1 ++ c e1 e2) f)))").c_str()));
    CHECK(expand_symbolic(sym("s1", 's', "s2", 's', "s3")) ==
          expected_c((std::string(head) + R"(Sub d1 (c e1 e2) (\c2:kc g1:g g2:g. s3 Sub g1 (d1 ++ c e1 e2) f)))").c_str()));
    CHECK_THROWS_AS(expand_symbolic(DiscourseTree::seq(DiscourseTree::symbol("s1"), DiscourseTree::symbol("s2"))),
                    ProfileMismatch);
  }

  TEST_CASE("initial arguments") {
    Lexicon b = Lexicon::standard(Profile::B);
    InitialArgs d = InitialArgs::defaults(Profile::B);
    REQUIRE(d.args.size() == 4);
    CHECK(d.args[0] == builtin::and_());
    CHECK(d.args[3] == parse_term(R"(\c:kb e1:g e2:g. ~ (c top bot))"));
    CHECK(InitialArgs::defaults(Profile::A).args.size() == 2);
    CHECK(InitialArgs::defaults(Profile::C).args[0] == builtin::coord());
    InitialArgs p = InitialArgs::parse(R"((|) ; j::nil ; nil ; \c:kb e1:g e2:g. top)", Profile::B, b.signature());
    CHECK(p.args[0] == builtin::or_());
    CHECK_THROWS_AS(InitialArgs::parse("(&) ; nil ; nil", Profile::B, b.signature()), ArityMismatch);
    CHECK_THROWS_AS(InitialArgs::parse("nil ; nil ; nil ; nil", Profile::B, b.signature()), TypeMismatch);
  }

  TEST_CASE("interpret") {
    Lexicon b = Lexicon::standard(Profile::B);
    Interpretation owns = interpret(leaf("john owns (a car)", b), b, InitialArgs::defaults(Profile::B));
    CHECK(owns.simplified == parse_formula("Ex y. (car y & own j y)"));
    CHECK(logically_equiv(owns.raw, parse_formula("Ex y. ((car y & own j y) & top)"), 3));

    Lexicon a = Lexicon::standard(Profile::A);
    Interpretation loves = interpret(leaf("john loves (a woman)", a), a, InitialArgs::defaults(Profile::A));
    CHECK(loves.raw == parse_formula("Ex y. (woman y & love j y & top)"));
    CHECK(loves.simplified == parse_formula("Ex y. (woman y & love j y)"));

    DiscourseTree d = DiscourseTree::seq(leaf("john doesnt own (a car)", b), leaf("it is red", b));
    Interpretation neg = interpret(d, b, InitialArgs::defaults(Profile::B));
    CHECK(neg.simplified == parse_formula("(~ Ex y. (car y & own j y)) & red(sel(j::nil))"));
    CHECK(logically_equiv(neg.raw, neg.simplified, 3));
    CHECK_THROWS(interpret(DiscourseTree::symbol("s1"), b, InitialArgs::defaults(Profile::B)));
  }

  TEST_CASE("environment threading in the connective profile") {
    Lexicon b = Lexicon::standard(Profile::B);
    auto candidates = [&](const char* first) {
      DiscourseTree d = DiscourseTree::seq(leaf(first, b), leaf("it is red", b));
      auto reports = report(interpret(d, b, InitialArgs::defaults(Profile::B)).simplified);
      REQUIRE(reports.size() == 1);
      std::vector<std::string> out;
      for (const auto& c : reports[0].candidates) out.push_back(to_text(c));
      return out;
    };
    CHECK(candidates("john owns (a car)") == std::vector<std::string>{"y", "j"});
    CHECK(candidates("john doesnt own (a car)") == std::vector<std::string>{"j"});
  }

  TEST_CASE("combinator laws on closed environments") {
    Signature s;
    s.declare("j", SemType::e());
    s.declare("m", SemType::e());
    const char* envs[] = {"nil", "j::nil", "m::j::nil", "(j::nil) ++ (m::nil)", "nil ++ nil"};
    for (const char* x : envs) {
      for (const char* y : envs) {
        Term e1 = parse_term(x, s), e2 = parse_term(y, s);
        CHECK(normalize(Term::apply(builtin::coord(), {e1, e2})) == normalize(e2));
        CHECK(normalize(Term::apply(builtin::sub(), {e1, e2})) ==
              Term::apply(builtin::union_(), {normalize(e1), normalize(e2)}));
      }
    }
  }
}
