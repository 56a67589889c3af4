#include "doctest.h"

#include "contsem/errors.hpp"
#include "contsem/formula_syntax.hpp"
#include "contsem/resolver.hpp"

using namespace contsem;

namespace {

std::vector<std::string> texts(const std::vector<EntityTerm>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(to_text(t));
  return out;
}

EnvExpr env_of(const char* formula) { return sel_sites(parse_formula(formula))[0].env(); }

}  // namespace

TEST_SUITE("resolver") {
  TEST_CASE("eval_env") {
    CHECK(texts(eval_env(env_of("red(sel((j::nil) ++ nil))"))) == std::vector<std::string>{"j"});
    CHECK(eval_env(EnvExpr::nil()).empty());
    CHECK(texts(eval_env(env_of("Ex y. red(sel((y::j::nil) ++ (j::nil)))"))) == std::vector<std::string>{"y", "j"});
    EnvExpr e = env_of("Ex y. red(sel(y::(nil ++ (j::y::nil))))");
    CHECK(eval_env(EnvExpr::union_of(e, EnvExpr::nil())) == eval_env(e));
  }

  TEST_CASE("reports") {
    auto neg = report(parse_formula("(~ Ex y. (car y & own j y)) & red(sel(j::nil))"));
    REQUIRE(neg.size() == 1);
    CHECK(texts(neg[0].candidates) == std::vector<std::string>{"j"});
    CHECK(render(neg[0]) == "sel#0 env=j::nil candidates=[j]");
    auto pos = report(parse_formula("Ex y. ((car y & own j y) & red(sel(j::y::nil)))"));
    REQUIRE(pos.size() == 1);
    CHECK(texts(pos[0].candidates) == std::vector<std::string>{"y", "j"});
    CHECK(report(parse_formula("Ex y. car y")).empty());
    auto two = report(parse_formula("Ex y. Ex z. (red(sel(j::y::z::nil)) & car(sel(nil)))"));
    REQUIRE(two.size() == 2);
    CHECK(two[0].site_id == 0);
    CHECK(texts(two[0].candidates) == std::vector<std::string>{"z", "y", "j"});
    CHECK(two[1].candidates.empty());
    CHECK(render(two[1]) == "sel#1 env=nil candidates=[]");
  }

  TEST_CASE("resolve") {
    Formula f = parse_formula("(~ Ex y. (car y & own j y)) & red(sel(j::nil))");
    CHECK(resolve(f, ResolveStrategy::Symbolic) == f);
    CHECK(resolve(f, ResolveStrategy::Recency) == parse_formula("(~ Ex y. (car y & own j y)) & red j"));
    CHECK(resolve(parse_formula("Ex y. red(sel(y::j::nil))"), ResolveStrategy::Recency) ==
          parse_formula("Ex y. red y"));
    try {
      resolve(parse_formula("red j & red(sel(nil))"), ResolveStrategy::Recency);
      FAIL("expected EmptyEnvironment");
    } catch (const EmptyEnvironment& e) {
      CHECK(e.site() == 0);
    }
    CHECK(resolve(parse_formula("red(sel(nil))"), ResolveStrategy::Symbolic) == parse_formula("red(sel(nil))"));
  }
}
