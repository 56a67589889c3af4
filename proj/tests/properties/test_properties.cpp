#include "doctest.h"

#include <random>

#include "contsem/discourse.hpp"
#include "contsem/formula_syntax.hpp"
#include "contsem/logic.hpp"
#include "contsem/normalize.hpp"
#include "contsem/resolver.hpp"
#include "contsem/term_syntax.hpp"
#include "generators.hpp"

using namespace contsem;
using contsem::testing::generator_signature;
using contsem::testing::random_formula;
using contsem::testing::random_term;

namespace {

constexpr std::size_t kTerms = 500;
constexpr std::size_t kFormulas = 200;

std::vector<Term> term_corpus() {
  std::mt19937 rng(20240611);
  std::vector<Term> out;
  for (std::size_t i = 0; i < kTerms; ++i) out.push_back(random_term(rng, 30));
  return out;
}

std::vector<Formula> formula_corpus() {
  std::mt19937 rng(7);
  std::vector<Formula> out;
  for (std::size_t i = 0; i < kFormulas; ++i) out.push_back(random_formula(rng, 4));
  return out;
}

bool has_subformula(const Formula& f, const Formula& g) {
  if (alpha_equivalent(f, g)) return true;
  switch (f.kind()) {
    case Formula::Kind::Not:
      return has_subformula(f.operand(), g);
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return has_subformula(f.left(), g) || has_subformula(f.right(), g);
    case Formula::Kind::Exists:
      return has_subformula(f.body(), g);
    default:
      return false;
  }
}

std::vector<std::string> names(const std::vector<EntityTerm>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(to_text(t));
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_SUITE("terms") {
  TEST_CASE("generated terms are closed, well-typed and small") {
    for (const Term& t : term_corpus()) {
      CHECK(is_closed(t));
      CHECK_NOTHROW(typecheck(t));
      CHECK(t.size() <= 30);
    }
  }

  TEST_CASE("most generated terms contain a redex") {
    std::size_t reducible = 0;
    for (const Term& t : term_corpus()) reducible += is_normal(t) ? 0 : 1;
    CHECK(reducible * 2 > kTerms);
  }

  TEST_CASE("normalization terminates and preserves the type") {
    for (const Term& t : term_corpus()) {
      Term nf = normalize(t);
      CHECK(is_normal(nf));
      CHECK(typecheck(nf) == typecheck(t));
    }
  }

  TEST_CASE("normal and applicative order agree") {
    for (const Term& t : term_corpus()) {
      CHECK(alpha_eq(normalize(t, kDefaultMaxSteps, ReductionOrder::Normal),
                     normalize(t, kDefaultMaxSteps, ReductionOrder::Applicative)));
    }
  }

  TEST_CASE("trace ends at the normal form") {
    for (const Term& t : term_corpus()) {
      auto steps = trace(t);
      CHECK(steps.empty() == is_normal(t));
      if (!steps.empty()) CHECK(steps.back().result == normalize(t));
      for (std::size_t i = 0; i < steps.size(); ++i) CHECK(steps[i].index == i + 1);
    }
  }

  TEST_CASE("pretty then parse is the identity") {
    const Signature sig = generator_signature();
    for (const Term& t : term_corpus()) {
      CHECK(alpha_eq(parse_term(pretty(t), sig), t));
      Term nf = normalize(t);
      CHECK(alpha_eq(parse_term(pretty(nf), sig), nf));
    }
  }

  TEST_CASE("alpha equivalence is an equivalence relation") {
    std::vector<Term> ts = term_corpus();
    ts.erase(ts.begin() + 60, ts.end());
    std::vector<Term> copies;
    const Signature sig = generator_signature();
    for (const Term& t : ts) copies.push_back(parse_term(pretty(t), sig));
    for (std::size_t i = 0; i < ts.size(); ++i) {
      CHECK(alpha_eq(ts[i], ts[i]));
      for (std::size_t j = 0; j < ts.size(); ++j) {
        CHECK(alpha_eq(ts[i], ts[j]) == alpha_eq(ts[j], ts[i]));
        if (alpha_eq(ts[i], copies[i]) && alpha_eq(copies[i], ts[j])) CHECK(alpha_eq(ts[i], ts[j]));
      }
    }
  }
}

TEST_SUITE("formulas") {
  TEST_CASE("simplify preserves logical equivalence") {
    for (const Formula& f : formula_corpus()) {
      CAPTURE(to_text(f));
      CHECK(logically_equiv(f, simplify(f), 3));
    }
  }

  TEST_CASE("simplify is idempotent") {
    for (const Formula& f : formula_corpus()) {
      Formula s = simplify(f);
      CHECK(simplify(s) == s);
    }
  }

  TEST_CASE("negated existentials survive") {
    const Formula guard =
        Formula::negation(Formula::exists("n0", Formula::atom("p", {EntityTerm::variable("n0")})));
    std::size_t kept = 0;
    for (const Formula& f : formula_corpus()) {
      const Formula s = simplify(f);
      CAPTURE(to_text(s));
      for (const Formula& g : {Formula::conjunction(guard, s), Formula::disjunction(s, guard),
                               Formula::negation(Formula::exists("n0", Formula::conjunction(
                                   Formula::atom("p", {EntityTerm::variable("n0")}), s)))}) {
        const Formula out = simplify(g);
        if (s.is(Formula::Kind::Top) || s.is(Formula::Kind::Bot)) continue;
        CHECK(has_subformula(out, guard));
        ++kept;
      }
    }
    CHECK(kept > kFormulas);
  }

  TEST_CASE("text round trip") {
    for (const Formula& f : formula_corpus()) CHECK(parse_formula(to_text(f)) == f);
  }

  TEST_CASE("environment evaluation ignores a trailing empty union") {
    for (const Formula& f : formula_corpus()) {
      for (const EntityTerm& site : sel_sites(f)) {
        CHECK(eval_env(EnvExpr::union_of(site.env(), EnvExpr::nil())) == eval_env(site.env()));
      }
    }
  }
}

TEST_SUITE("fusion") {
  TEST_CASE("truth tables for both connectives") {
    auto conn = [](bool conj, bool a, bool b) { return conj ? (a && b) : (a || b); };
    for (bool conj : {true, false}) {
      int rows = 0;
      for (int bits = 0; bits < 8; ++bits) {
        const bool phi = bits & 1, psi = bits & 2, k = bits & 4;
        CHECK((conn(conj, phi, k) && conn(conj, psi, k)) == conn(conj, phi && psi, k));
        ++rows;
      }
      CHECK(rows == 8);
    }
  }
}

TEST_SUITE("accessibility") {
  TEST_CASE("negation blocks the indefinite for every template word") {
    const char* names_[] = {"mary", "bill", "sue"};
    const char* verbs[] = {"sees", "likes", "owns"};
    const char* nouns[] = {"dog", "cat", "car"};
    const char* adjs[] = {"happy", "red", "old"};
    for (const char* pn : names_) {
      for (const char* v : verbs) {
        for (const char* n : nouns) {
          for (const char* adj : adjs) {
            Lexicon lex = Lexicon::standard(Profile::B);
            lex = extend(lex, std::string("pnoun ") + pn + "\ntverb " + v + "\nnoun " + n + "\nadj " + adj + "\n");
            for (bool negated : {true, false}) {
              std::string first = std::string(pn) + (negated ? " doesnt " : " ") + v + " (a " + n + ")";
              DiscourseTree d = DiscourseTree::seq(DiscourseTree::leaf(parse_sentence(first, lex)),
                                                   DiscourseTree::leaf(parse_sentence(std::string("it is ") + adj, lex)));
              Interpretation r = interpret(d, lex, InitialArgs::defaults(Profile::B));
              auto reports = report(r.simplified);
              REQUIRE(reports.size() == 1);
              auto cands = names(reports[0].candidates);
              CAPTURE(first);
              CHECK(contains(cands, pn));
              CHECK(contains(cands, "y") != negated);
              CHECK(logically_equiv(r.raw, r.simplified, 2));
            }
          }
        }
      }
    }
  }
}
