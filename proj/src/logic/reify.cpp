#include <set>
#include <string>
#include <vector>

#include "contsem/errors.hpp"
#include "contsem/logic.hpp"
#include "contsem/normalize.hpp"

namespace contsem {

namespace {

const char* const kBaseNames[] = {"y", "z", "w", "v", "u"};

class Reifier {
 public:
  explicit Reifier(const Term& term) {
    for (auto& n : constant_names(term)) taken_.insert(n);
  }

  Formula prop(const Term& term, const std::string& pos) {
    if (term.is_lam()) throw NotReifiable(pos, "abstraction where a proposition was expected");
    Spine sp = spine(term);
    const Term& head = sp.head;
    const auto& args = sp.args;
    auto arg_pos = [&](std::size_t i) {
      // position of argument i in the left-nested spine
      return pos + std::string(args.size() - 1 - i, 'f') + "a";
    };
    if (head.is_var()) throw NotReifiable(pos, "variable in head position");
    if (head.is_lam()) throw NotReifiable(pos, "redex");
    const std::string& name = head.name();
    if (name == builtin::kTop && args.empty()) return Formula::top();
    if (name == builtin::kBot && args.empty()) return Formula::bot();
    if (name == builtin::kNot && args.size() == 1) return Formula::negation(prop(args[0], arg_pos(0)));
    if ((name == builtin::kAnd || name == builtin::kOr) && args.size() == 2) {
      Formula l = prop(args[0], arg_pos(0));
      Formula r = prop(args[1], arg_pos(1));
      return name == builtin::kAnd ? Formula::conjunction(std::move(l), std::move(r))
                                   : Formula::disjunction(std::move(l), std::move(r));
    }
    if (name == builtin::kExists && args.size() == 1) {
      const Term& scope = args[0];
      if (!scope.is_lam()) throw NotReifiable(arg_pos(0), "quantifier scope is not an abstraction");
      std::string var = fresh();
      names_.push_back(var);
      Formula body = prop(scope.body(), arg_pos(0) + "b");
      names_.pop_back();
      return Formula::exists(std::move(var), std::move(body));
    }
    if (builtin::is_reserved(name)) throw NotReifiable(pos, "operator '" + name + "' out of place");
    SemType ty = head.type();
    std::vector<EntityTerm> ents;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (ty.kind() != SemType::Kind::Arrow || ty.domain() != SemType::e()) {
        throw NotReifiable(pos, "'" + name + "' is not a predicate");
      }
      ents.push_back(entity(args[i], arg_pos(i)));
      ty = ty.codomain();
    }
    if (ty != SemType::t()) throw NotReifiable(pos, "'" + name + "' is not a predicate");
    return Formula::atom(name, std::move(ents));
  }

 private:
  EntityTerm entity(const Term& term, const std::string& pos) {
    if (term.is_var()) {
      if (term.index() >= names_.size()) throw NotReifiable(pos, "unbound variable");
      return EntityTerm::variable(names_[names_.size() - 1 - term.index()]);
    }
    if (term.is_const() && !builtin::is_reserved(term.name()) && term.type() == SemType::e()) {
      return EntityTerm::constant(term.name());
    }
    if (term.is_app() && term.fun().is_const(builtin::kSel)) {
      EnvExpr env = environment(term.arg(), pos + "a");
      return EntityTerm::sel(std::move(env), next_site_++);
    }
    throw NotReifiable(pos, "not an entity");
  }

  EnvExpr environment(const Term& term, const std::string& pos) {
    if (term.is_const(builtin::kNil)) return EnvExpr::nil();
    Spine sp = spine(term);
    if (sp.args.size() == 2 && sp.head.is_const(builtin::kCons)) {
      EntityTerm head = entity(sp.args[0], pos + "fa");
      if (head.kind() == EntityTerm::Kind::Sel) throw NotReifiable(pos + "fa", "sel site stored as a referent");
      return EnvExpr::cons(std::move(head), environment(sp.args[1], pos + "a"));
    }
    if (sp.args.size() == 2 && sp.head.is_const(builtin::kUnion)) {
      EnvExpr l = environment(sp.args[0], pos + "fa");
      return EnvExpr::union_of(std::move(l), environment(sp.args[1], pos + "a"));
    }
    if (sp.head.is_var()) throw NotReifiable(pos, "environment variable");
    throw NotReifiable(pos, "not an environment");
  }

  std::string fresh() {
    for (;;) {
      std::size_t n = counter_++;
      std::string name = kBaseNames[n % 5];
      if (n >= 5) name += std::to_string(n / 5);
      if (taken_.count(name) == 0) return name;
    }
  }

  std::vector<std::string> names_;
  std::set<std::string> taken_;
  std::size_t counter_ = 0;
  std::size_t next_site_ = 0;
};

}  // namespace

Formula reify(const Term& term) {
  if (!is_closed(term)) throw NotReifiable("", "term is not closed");
  SemType ty = typecheck(term);
  if (ty != SemType::t()) throw NotReifiable("", "term has type " + ty.str() + ", expected t");
  if (!is_normal(term)) throw NotReifiable("", "term is not in normal form");
  return Reifier(term).prop(term, "");
}

}  // namespace contsem
