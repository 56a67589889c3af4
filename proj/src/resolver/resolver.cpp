#include "contsem/resolver.hpp"

#include <algorithm>
#include <map>

#include "contsem/errors.hpp"
#include "contsem/formula_syntax.hpp"

namespace contsem {

namespace {

void append_env(const EnvExpr& env, std::vector<EntityTerm>& out) {
  switch (env.kind()) {
    case EnvExpr::Kind::Nil:
      return;
    case EnvExpr::Kind::Cons:
      out.push_back(env.head());
      append_env(env.tail(), out);
      return;
    case EnvExpr::Kind::Union:
      append_env(env.left(), out);
      append_env(env.right(), out);
      return;
  }
}

std::vector<EntityTerm> rank(std::vector<EntityTerm> referents, const std::vector<std::string>& scope) {
  auto depth = [&](const EntityTerm& r) -> std::ptrdiff_t {
    if (r.kind() != EntityTerm::Kind::Var) return -1;
    for (std::size_t i = scope.size(); i-- > 0;) {
      if (scope[i] == r.name()) return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
  };
  std::stable_sort(referents.begin(), referents.end(),
                   [&](const EntityTerm& a, const EntityTerm& b) { return depth(a) > depth(b); });
  return referents;
}

void collect_reports(const Formula& f, std::vector<std::string>& scope, std::vector<AccessReport>& out) {
  switch (f.kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return;
    case Formula::Kind::Not:
      collect_reports(f.operand(), scope, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      collect_reports(f.left(), scope, out);
      collect_reports(f.right(), scope, out);
      return;
    case Formula::Kind::Exists:
      scope.push_back(f.var());
      collect_reports(f.body(), scope, out);
      scope.pop_back();
      return;
    case Formula::Kind::Atom:
      for (const auto& a : f.args()) {
        if (a.kind() != EntityTerm::Kind::Sel) continue;
        out.push_back(AccessReport{a.site(), a.env(), rank(eval_env(a.env()), scope)});
      }
      return;
  }
}

Formula substitute_sites(const Formula& f, const std::map<std::size_t, EntityTerm>& choice) {
  switch (f.kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return f;
    case Formula::Kind::Not:
      return Formula::negation(substitute_sites(f.operand(), choice));
    case Formula::Kind::And:
      return Formula::conjunction(substitute_sites(f.left(), choice), substitute_sites(f.right(), choice));
    case Formula::Kind::Or:
      return Formula::disjunction(substitute_sites(f.left(), choice), substitute_sites(f.right(), choice));
    case Formula::Kind::Exists:
      return Formula::exists(f.var(), substitute_sites(f.body(), choice));
    case Formula::Kind::Atom: {
      std::vector<EntityTerm> args;
      for (const auto& a : f.args()) {
        args.push_back(a.kind() == EntityTerm::Kind::Sel ? choice.at(a.site()) : a);
      }
      return Formula::atom(f.predicate(), std::move(args));
    }
  }
  return f;
}

}  // namespace

std::vector<EntityTerm> eval_env(const EnvExpr& env) {
  std::vector<EntityTerm> all;
  append_env(env, all);
  std::vector<EntityTerm> out;
  for (auto& r : all) {
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  return out;
}

std::vector<AccessReport> report(const Formula& f) {
  std::vector<std::string> scope;
  std::vector<AccessReport> out;
  collect_reports(f, scope, out);
  std::stable_sort(out.begin(), out.end(),
                   [](const AccessReport& a, const AccessReport& b) { return a.site_id < b.site_id; });
  return out;
}

std::string render(const AccessReport& r) {
  std::string out = "sel#" + std::to_string(r.site_id) + " env=" + to_text(r.env) + " candidates=[";
  for (std::size_t i = 0; i < r.candidates.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_text(r.candidates[i]);
  }
  return out + "]";
}

Formula resolve(const Formula& f, ResolveStrategy strategy) {
  if (strategy == ResolveStrategy::Symbolic) return f;
  std::map<std::size_t, EntityTerm> choice;
  for (const auto& r : report(f)) {
    if (r.candidates.empty()) throw EmptyEnvironment(r.site_id);
    choice.emplace(r.site_id, r.candidates.front());
  }
  return substitute_sites(f, choice);
}

}  // namespace contsem
