#include "doctest.h"

#include <algorithm>

#include "contsem/errors.hpp"
#include "contsem/lexicon.hpp"
#include "contsem/normalize.hpp"
#include "contsem/term_syntax.hpp"

using namespace contsem;

namespace {

const SemType E = SemType::e();
const SemType T = SemType::t();
const SemType G = SemType::g();

Signature sig() {
  Signature s;
  s.declare("j", E);
  s.declare("woman", SemType::arrow(E, T));
  s.declare("love", SemType::chain({E, E, T}));
  return s;
}

}  // namespace

TEST_SUITE("lambda") {
  TEST_CASE("type abbreviations expand") {
    CHECK(kappa_b() == parse_type("t>t>t"));
    CHECK(kappa_c() == parse_type("g>g>g"));
    CHECK(sentence_a() == parse_type("g>(g>t)>t"));
    CHECK(sentence_b() == parse_type("(t>t>t)>g>g>((t>t>t)>g>g>t)>t"));
    CHECK(sentence_c() == parse_type("kc>g>g>(kc>g>g>t)>t"));
    CHECK(parse_type("e>t>t") == SemType::arrow(E, SemType::arrow(T, T)));
    CHECK(parse_type("(e>t)>t").str() == "(e>t)>t");
    CHECK(SemType::chain({E, E, T}).str() == "e>e>t");
    CHECK_THROWS_AS(parse_type("e>"), SyntaxError);
    CHECK_THROWS_AS(parse_type("q"), SyntaxError);
  }

  TEST_CASE("typecheck") {
    CHECK(typecheck(Term::lam(E, Term::var(0))) == SemType::arrow(E, E));
    Term j = Term::constant("j", E);
    CHECK_THROWS_AS(typecheck(Term::app(j, j)), TypeMismatch);
    CHECK_THROWS_AS(typecheck(Term::var(0)), UnboundVariable);
    CHECK_THROWS_AS(typecheck(Term::app(builtin::not_(), j)), TypeMismatch);
    TypingContext ctx;
    ctx.push(G);
    CHECK(typecheck(Term::var(0), ctx) == G);
    // The proper noun of the connective profile is an NP.
    const SemType sb = sentence_b();
    CHECK(typecheck(entry("john", Profile::B)) == SemType::arrow(SemType::arrow(E, sb), sb));
  }

  TEST_CASE("type mismatch reports the position") {
    Term bad = parse_term(R"(\x:e. ~ x)", sig());
    try {
      typecheck(bad);
      FAIL("expected a type mismatch");
    } catch (const TypeMismatch& e) {
      CHECK(e.expected() == "t");
      CHECK(e.found() == "e");
      CHECK(e.position() == "ba");
    }
  }

  TEST_CASE("built-in constant types") {
    CHECK(typecheck(builtin::not_()) == parse_type("t>t"));
    CHECK(typecheck(builtin::and_()) == kappa_b());
    CHECK(typecheck(builtin::exists()) == parse_type("(e>t)>t"));
    CHECK(typecheck(builtin::cons()) == parse_type("e>g>g"));
    CHECK(typecheck(builtin::union_()) == kappa_c());
    CHECK(typecheck(builtin::nil()) == G);
    CHECK(typecheck(builtin::sel()) == parse_type("g>e"));
    CHECK(typecheck(builtin::coord()) == kappa_c());
    CHECK(typecheck(builtin::sub()) == kappa_c());
    CHECK(typecheck(builtin::dual()) == parse_type("kb>kb"));
  }

  TEST_CASE("normalize") {
    Term j = Term::constant("j", E);
    CHECK(normalize(Term::app(Term::lam(E, Term::var(0)), j)) == j);
    Term nf = normalize(parse_term(R"((\P:e>t. \x:e. P x) woman)", sig()));
    CHECK(nf == parse_term(R"(\x:e. woman x)", sig()));
    CHECK(is_normal(nf));
    CHECK_FALSE(is_normal(Term::app(Term::lam(E, Term::var(0)), j)));
  }

  TEST_CASE("substitution avoids capture") {
    // (\x. \y. x) y0 under a binder y0: the free variable must not be captured.
    Term t = parse_term(R"(\z:e. (\x:e. \y:e. love x y) z)", sig());
    CHECK(normalize(t) == parse_term(R"(\z:e. \y:e. love z y)", sig()));
    Term k = Term::lam(E, Term::lam(E, Term::var(1)));
    CHECK(apply_lambda(k, Term::var(3)) == Term::lam(E, Term::var(4)));
    CHECK(shift(Term::lam(E, Term::app(Term::var(0), Term::var(1))), 2) ==
          Term::lam(E, Term::app(Term::var(0), Term::var(3))));
  }

  TEST_CASE("combinator rules") {
    Term e1 = parse_term("j::nil", sig());
    Term e2 = parse_term("nil ++ nil", sig());
    CHECK(normalize(Term::apply(builtin::coord(), {e1, e2})) == e2);
    CHECK(normalize(Term::apply(builtin::sub(), {e1, e2})) == Term::apply(builtin::union_(), {e1, e2}));
    CHECK(normalize(Term::app(builtin::dual(), builtin::and_())) == builtin::or_());
    CHECK(normalize(Term::app(builtin::dual(), builtin::or_())) == builtin::and_());
    Term c = Term::var(0);
    CHECK(normalize(Term::lam(kappa_b(), Term::app(builtin::dual(), Term::app(builtin::dual(), c)))) ==
          Term::lam(kappa_b(), c));
    // Unsaturated combinators stay.
    CHECK(is_normal(Term::app(builtin::coord(), e1)));
    CHECK(is_normal(Term::lam(kappa_b(), Term::app(builtin::dual(), Term::var(0)))));
  }

  TEST_CASE("step budget") {
    Term t = parse_term(R"((\x:e. x) ((\y:e. y) j))", sig());
    CHECK_THROWS_AS(normalize(t, 1), StepBudgetExceeded);
    CHECK(normalize(t, 2) == parse_term("j", sig()));
  }

  TEST_CASE("trace") {
    Term j = parse_term("j", sig());
    auto one = trace(Term::app(Term::lam(E, Term::var(0)), j));
    REQUIRE(one.size() == 1);
    CHECK(one[0].index == 1);
    CHECK(one[0].position == "");
    CHECK(one[0].result == j);
    CHECK(trace(j).empty());
    Term t = parse_term(R"(woman ((\x:e. x) ((\y:e. y) j)))", sig());
    auto steps = trace(t);
    REQUIRE(steps.size() == 2);
    CHECK(steps[0].position == "a");
    CHECK(steps.back().result == normalize(t));
  }

  TEST_CASE("alpha equivalence") {
    Term id_e = Term::lam(E, Term::var(0));
    CHECK(alpha_eq(id_e, Term::lam(E, Term::var(0))));
    CHECK_FALSE(alpha_eq(id_e, Term::lam(T, Term::var(0))));
    Term a = parse_term(R"(\e:g phi:g>t. Ex y. woman y & love j y & phi (y::e))", sig());
    Term b = parse_term(R"(\env:g k:g>t. Ex z. woman z & love j z & k (z::env))", sig());
    CHECK(alpha_eq(a, b));
  }

  TEST_CASE("parse") {
    CHECK(parse_term(R"(\x:e. x)") == Term::lam(E, Term::var(0)));
    CHECK(parse_term(R"(\e:g. \phi:g>t. phi e)") ==
          Term::lam(G, Term::lam(SemType::arrow(G, T), Term::app(Term::var(0), Term::var(1)))));
    CHECK(parse_term("(&)") == builtin::and_());
    CHECK(parse_term("top & bot | top") ==
          Term::apply(builtin::or_(), {Term::apply(builtin::and_(), {builtin::top(), builtin::bot()}),
                                       builtin::top()}));
    CHECK(parse_term("j::j::nil", sig()) ==
          Term::apply(builtin::cons(), {Term::constant("j", E),
                                        Term::apply(builtin::cons(), {Term::constant("j", E), builtin::nil()})}));
    CHECK_THROWS_AS(parse_term(R"(\x:e x)"), SyntaxError);
    CHECK_THROWS_AS(parse_term("(top"), SyntaxError);
    CHECK_THROWS_AS(parse_term("top $"), SyntaxError);
    CHECK_THROWS_AS(parse_term("mystery"), UnknownIdentifier);
    CHECK_THROWS_AS(parse_term(R"(\top:t. top)"), SyntaxError);
  }

  TEST_CASE("parse errors carry positions") {
    try {
      parse_term("top & mystery");
      FAIL("expected an unknown identifier");
    } catch (const UnknownIdentifier& e) {
      CHECK(e.name() == "mystery");
    }
    try {
      parse_term("top &");
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.position() == 5);
    }
  }

  TEST_CASE("pretty") {
    CHECK(pretty(Term::lam(E, Term::var(0))) == R"(\x1:e. x1)");
    CHECK(pretty(Term::constant("j", E)) == "j");
    CHECK(pretty(builtin::and_()) == "(&)");
    Term nf = parse_term(R"(\e:g phi:g>t. Ex y. woman y & love j y & phi (y::e))", sig());
    CHECK(pretty(nf) == R"(\x1:g. \x2:g>t. Ex x3. woman x3 & love j x3 & x2 (x3::x1))");
    CHECK(parse_term(pretty(nf), sig()) == nf);
    CHECK(pretty(parse_term("~ (top | bot) & top")) == "~ (top | bot) & top");
    CHECK(pretty(parse_term("(top & bot) & top")) == "(top & bot) & top");
  }

  TEST_CASE("signature") {
    Signature s;
    CHECK(s.contains("sel"));
    s.declare("own", SemType::chain({E, E, T}));
    CHECK(s.lookup("own")->type() == SemType::chain({E, E, T}));
    CHECK_NOTHROW(s.declare("own", SemType::chain({E, E, T})));
    CHECK_THROWS_AS(s.declare("own", SemType::arrow(E, T)), std::invalid_argument);
    CHECK_THROWS_AS(s.declare("top", T), std::invalid_argument);
    CHECK_THROWS_AS(s.declare("x12", E), std::invalid_argument);
    CHECK_FALSE(s.lookup("nobody").has_value());
  }

  TEST_CASE("term helpers") {
    Term t = parse_term(R"(\x:e. love x j)", sig());
    CHECK(is_closed(t));
    CHECK_FALSE(is_closed(t.body()));
    auto names = constant_names(t);
    CHECK(std::find(names.begin(), names.end(), "love") != names.end());
    CHECK(rename_constant(t, "j", "m") == parse_term(R"(\x:e. love x m)", Signature(sig()).declare("m", E)));
    Spine sp = spine(t.body());
    CHECK(sp.head.is_const("love"));
    CHECK(sp.args.size() == 2);
    CHECK(t.size() == 6);
  }
}
