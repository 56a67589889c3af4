#include "doctest.h"

#include "contsem/errors.hpp"
#include "contsem/formula_syntax.hpp"
#include "contsem/logic.hpp"
#include "contsem/normalize.hpp"
#include "contsem/term_syntax.hpp"

using namespace contsem;

namespace {

Formula F(const char* text) { return parse_formula(text); }

Signature sig() {
  Signature s;
  s.declare("j", SemType::e());
  s.declare("car", SemType::arrow(SemType::e(), SemType::t()));
  s.declare("red", SemType::arrow(SemType::e(), SemType::t()));
  s.declare("own", SemType::chain({SemType::e(), SemType::e(), SemType::t()}));
  return s;
}

}  // namespace

TEST_SUITE("formula") {
  TEST_CASE("text round trip") {
    for (const char* text : {"top", "~ bot", "car j", "own j y", "Ex y. (car y & own j y)",
                             "(~ Ex y. (car y & own j y)) & red(sel(j::nil))",
                             "red(sel((j::nil) ++ nil))", "Ex y. Ex z. (own y z | ~ own z y)"}) {
      Formula f = F(text);
      CHECK(parse_formula(to_text(f)) == f);
    }
    CHECK(to_text(F("(~ Ex y. (car y & own j y)) & red(sel(j::nil))")) ==
          "(~ Ex y. (car y & own j y)) & red(sel(j::nil))");
    CHECK_THROWS_AS(parse_formula("car &"), SyntaxError);
    CHECK_THROWS_AS(parse_formula("Ex . top"), SyntaxError);
  }

  TEST_CASE("variables and constants") {
    Formula f = F("Ex y. own j y");
    const Formula& atom = f.body();
    CHECK(atom.args()[0].kind() == EntityTerm::Kind::Const);
    CHECK(atom.args()[1].kind() == EntityTerm::Kind::Var);
    CHECK(free_variables(atom) == std::vector<std::string>{"y"});
    CHECK(free_variables(f).empty());
    CHECK(occurs_free("y", F("Ex z. red(sel(y::nil))").body()) == false);
  }

  TEST_CASE("sites and alpha equivalence") {
    Formula f = F("red(sel(j::nil)) & car(sel(nil))");
    auto sites = sel_sites(f);
    REQUIRE(sites.size() == 2);
    CHECK(sites[0].site() == 0);
    CHECK(sites[1].site() == 1);
    CHECK(alpha_equivalent(F("Ex y. car y"), F("Ex z. car z")));
    CHECK_FALSE(alpha_equivalent(F("Ex y. car y"), F("Ex z. red z")));
    CHECK_FALSE(F("Ex y. car y") == F("Ex z. car z"));
  }

  TEST_CASE("json") {
    auto j = to_json(F("~ Ex y. red(sel(y::nil))"));
    CHECK(j["tag"] == "not");
    CHECK(j["operand"]["tag"] == "exists");
    CHECK(j["operand"]["var"] == "y");
    auto atom = j["operand"]["body"];
    CHECK(atom["tag"] == "atom");
    CHECK(atom["pred"] == "red");
    CHECK(atom["args"][0]["tag"] == "sel");
    CHECK(atom["args"][0]["site"] == 0);
  }
}

TEST_SUITE("reify") {
  TEST_CASE("constants and connectives") {
    CHECK(reify(builtin::top()) == Formula::top());
    CHECK(reify(parse_term("~ (car j)", sig())) ==
          Formula::negation(Formula::atom("car", {EntityTerm::constant("j")})));
    CHECK(reify(parse_term("Ex x:e. car x & own j x", sig())) == F("Ex y. (car y & own j y)"));
    CHECK(reify(parse_term("Ex x. Ex x. own x x", sig())) == F("Ex y. Ex z. own z z"));
    CHECK(reify(parse_term("red (sel ((j::nil) ++ nil))", sig())) == F("red(sel((j::nil) ++ nil))"));
  }

  TEST_CASE("outside the fragment") {
    CHECK_THROWS_AS(reify(parse_term(R"(\x:e. car x)", sig())), NotReifiable);
    CHECK_THROWS_AS(reify(parse_term(R"((\x:e. car x) j)", sig())), NotReifiable);
    Term open_connective = parse_term(R"(\c:kb. c top bot)", sig()).body();
    CHECK_THROWS_AS(reify(open_connective), NotReifiable);
    // A symbolic expansion keeps its connective variable.
    Signature s = sig();
    s.declare("s1", sentence_c());
    Term symbolic = normalize(parse_term(R"(s1 Coord nil nil (\c:kc e1:g e2:g. top))", s));
    CHECK_THROWS_AS(reify(symbolic), NotReifiable);
    Term stuck = normalize(parse_term(R"(\c:kc. s1 c nil nil (\c2:kc e1:g e2:g. top))", s));
    CHECK_THROWS_AS(reify(Term::app(stuck, Term::var(0))), NotReifiable);
    CHECK_THROWS_AS(reify(parse_term("car (sel (sel nil :: nil))", sig())), NotReifiable);
  }

  TEST_CASE("errors name the position") {
    Signature s = sig();
    s.declare("p", SemType::t());
    try {
      reify(parse_term("top & (s j)", Signature(s).declare("s", SemType::arrow(SemType::e(), SemType::t()))));
    } catch (...) {
      FAIL("declared predicates are reifiable");
    }
    Term t = Term::apply(builtin::and_(), {builtin::top(), Term::var(0)});
    try {
      reify(t);
      FAIL("expected NotReifiable");
    } catch (const NotReifiable&) {
    }
  }
}

TEST_SUITE("simplify") {
  TEST_CASE("unit laws") {
    CHECK(simplify(F("car j | bot")) == F("car j"));
    CHECK(simplify(F("bot | car j")) == F("car j"));
    CHECK(simplify(F("car j & top")) == F("car j"));
    CHECK(simplify(F("top & car j")) == F("car j"));
    CHECK(simplify(F("car j & bot")) == F("bot"));
    CHECK(simplify(F("car j | top")) == F("top"));
    CHECK(simplify(F("~ top")) == F("bot"));
    CHECK(simplify(F("~ bot")) == F("top"));
  }

  TEST_CASE("negation") {
    CHECK(simplify(F("~ ~ car j")) == F("car j"));
    CHECK(simplify(F("~ (car j | red j)")) == F("~ car j & ~ red j"));
    CHECK(simplify(F("~ (car j & red j)")) == F("~ car j | ~ red j"));
    CHECK(simplify(F("~ Ex y. (car y | red y)")) == F("~ Ex y. (car y | red y)"));
  }

  TEST_CASE("shared-tail fusion") {
    CHECK(alpha_equivalent(simplify(F("Ex y. ((car y | Ex z. car z) & (own j y | Ex w. car w))")),
                           F("(Ex y. (car y & own j y)) | Ex z. car z")));
    CHECK(simplify(F("(car j & red j) & (own j j & red j)")) == F("(car j & own j j) & red j"));
    CHECK(simplify(F("(car j | red j) & (own j j | car j)")) == F("(car j | red j) & (own j j | car j)"));
  }

  TEST_CASE("quantifier scope") {
    CHECK(simplify(F("Ex y. top")) == F("top"));
    CHECK(simplify(F("Ex y. (car y & red j)")) == F("(Ex y. car y) & red j"));
    CHECK(simplify(F("Ex y. (red j | car y)")) == F("red j | Ex y. car y"));
  }

  TEST_CASE("environments") {
    CHECK(simplify(F("red(sel((j::nil) ++ nil))")) == F("red(sel(j::nil))"));
    CHECK(simplify(F("Ex y. red(sel((y::nil) ++ (j::y::nil)))")) == F("Ex y. red(sel(y::j::nil))"));
  }

  TEST_CASE("negated discourse") {
    Formula raw = F("~ Ex y. ((car y | ~ ((top & red(sel((j::nil) ++ nil))) | ~ (top | bot))) & "
                    "(own j y | ~ ((top & red(sel((j::nil) ++ nil))) | ~ (top | bot))))");
    Formula s = simplify(raw);
    CHECK(s == F("(~ Ex y. (car y & own j y)) & red(sel(j::nil))"));
    CHECK(logically_equiv(raw, s, 3));
    CHECK(simplify(s) == s);
  }
}

TEST_SUITE("oracle") {
  TEST_CASE("basic equivalences") {
    for (std::size_t n = 1; n <= 4; ++n) CHECK(logically_equiv(F("car j"), F("~ ~ car j"), n));
    CHECK_FALSE(logically_equiv(F("Ex y. car y"), F("Ex y. own y y"), 2));
    CHECK(logically_equiv(F("Ex y. (car y & red j)"), F("(Ex y. car y) & red j"), 3));
    CHECK_FALSE(logically_equiv(F("Ex y. (car y & red y)"), F("(Ex y. car y) & Ex z. red z"), 2));
  }

  TEST_CASE("sel sites") {
    CHECK(logically_equiv(F("red(sel(j::nil))"), F("red(sel((j::nil) ++ nil))"), 2));
    CHECK_FALSE(logically_equiv(F("red(sel(j::nil))"), F("red j"), 2));
    CHECK(logically_equiv(F("Ex y. red(sel(y::nil))"), F("Ex z. red(sel(z::nil))"), 3));
    CHECK_FALSE(logically_equiv(F("red(sel(j::nil))"), F("red(sel(nil))"), 2));
  }

  TEST_CASE("modes and limits") {
    CHECK(logically_equiv(F("car j"), F("car j | bot"), 2, OracleMode::Sampled));
    CHECK_THROWS_AS(logically_equiv(F("car j"), F("car j"), 5), std::invalid_argument);
    CHECK_THROWS_AS(logically_equiv(F("car j"), F("car j"), 0), std::invalid_argument);
    Formula big = F("p1 j & p2 j & p3 j & p4 j & p5 j & p6 j & p7 j");
    CHECK_THROWS_AS(logically_equiv(big, big, 2, OracleMode::Exhaustive), SignatureTooLarge);
    CHECK(logically_equiv(big, big, 2));
    Formula ternary = F("t3 j j j");
    CHECK_THROWS_AS(logically_equiv(ternary, ternary, 2, OracleMode::Exhaustive), SignatureTooLarge);
    CHECK_THROWS_AS(logically_equiv(F("car j"), F("car j j"), 2), std::invalid_argument);
  }
}
