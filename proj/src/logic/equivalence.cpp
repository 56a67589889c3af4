#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "contsem/errors.hpp"
#include "contsem/logic.hpp"
#include "contsem/resolver.hpp"

namespace contsem {

namespace {

constexpr std::size_t kMaxExhaustiveArity = 2;
constexpr std::size_t kMaxExhaustivePredicates = 6;
constexpr double kMaxExhaustiveLog2 = 20.0;

struct Arg {
  enum class Kind { Const, Slot, Fn } kind;
  std::size_t index;               // constant, variable slot or function
  std::vector<std::size_t> slots;  // Fn arguments
};

struct Node {
  Formula::Kind kind;
  std::size_t a = 0, b = 0;  // children
  std::size_t slot = 0;      // Exists
  std::size_t pred = 0;      // Atom
  std::vector<Arg> args;
};

struct Vocabulary {
  std::map<std::string, std::size_t> consts;
  std::map<std::string, std::size_t> preds;
  std::vector<std::size_t> pred_arity;
  std::map<std::string, std::size_t> fns;
  std::vector<std::size_t> fn_arity;
  std::size_t slots = 0;
};

class Compiler {
 public:
  explicit Compiler(Vocabulary& sig) : sig_(sig) {}

  std::size_t compile(const Formula& f, std::vector<Node>& out) {
    Node n;
    n.kind = f.kind();
    switch (f.kind()) {
      case Formula::Kind::Top:
      case Formula::Kind::Bot:
        break;
      case Formula::Kind::Not:
        n.a = compile(f.operand(), out);
        break;
      case Formula::Kind::And:
      case Formula::Kind::Or:
        n.a = compile(f.left(), out);
        n.b = compile(f.right(), out);
        break;
      case Formula::Kind::Exists:
        n.slot = sig_.slots++;
        scope_.emplace_back(f.var(), n.slot);
        n.a = compile(f.body(), out);
        scope_.pop_back();
        break;
      case Formula::Kind::Atom: {
        auto [it, fresh] = sig_.preds.emplace(f.predicate(), sig_.preds.size());
        if (fresh) {
          sig_.pred_arity.push_back(f.args().size());
        } else if (sig_.pred_arity[it->second] != f.args().size()) {
          throw std::invalid_argument("predicate '" + f.predicate() + "' used with different arities");
        }
        n.pred = it->second;
        for (const auto& a : f.args()) n.args.push_back(arg(a));
        break;
      }
    }
    out.push_back(std::move(n));
    return out.size() - 1;
  }

 private:
  const std::size_t* bound(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == name) return &it->second;
    }
    return nullptr;
  }

  std::size_t constant(const std::string& name) {
    return sig_.consts.emplace(name, sig_.consts.size()).first->second;
  }

  Arg arg(const EntityTerm& t) {
    if (t.kind() == EntityTerm::Kind::Sel) {
      Arg out{Arg::Kind::Fn, 0, {}};
      std::string key;
      for (const auto& r : eval_env(t.env())) {
        const std::size_t* slot = r.kind() == EntityTerm::Kind::Var ? bound(r.name()) : nullptr;
        if (slot != nullptr) {
          key += "_,";
          out.slots.push_back(*slot);
        } else {
          key += "c:" + r.name() + ",";
        }
      }
      auto [it, fresh] = sig_.fns.emplace(key, sig_.fns.size());
      if (fresh) sig_.fn_arity.push_back(out.slots.size());
      out.index = it->second;
      return out;
    }
    if (t.kind() == EntityTerm::Kind::Var) {
      if (const std::size_t* slot = bound(t.name())) return Arg{Arg::Kind::Slot, *slot, {}};
    }
    return Arg{Arg::Kind::Const, constant(t.name()), {}};
  }

  Vocabulary& sig_;
  std::vector<std::pair<std::string, std::size_t>> scope_;
};

class Model {
 public:
  Model(const Vocabulary& sig, std::size_t n) : n_(n), slots_(sig.slots, 0) {
    std::size_t offset = consts_ = sig.consts.size();
    for (std::size_t a : sig.pred_arity) {
      pred_offset_.push_back(offset);
      offset += power(a);
    }
    pred_end_ = offset;
    for (std::size_t a : sig.fn_arity) {
      fn_offset_.push_back(offset);
      offset += power(a);
    }
    digits_.assign(offset, 0);
  }

  std::size_t digit_count() const { return digits_.size(); }
  std::size_t radix(std::size_t i) const { return i >= consts_ && i < pred_end_ ? 2 : n_; }

  double log2_size() const {
    double bits = 0;
    for (std::size_t i = 0; i < digits_.size(); ++i) bits += std::log2(static_cast<double>(radix(i)));
    return bits;
  }

  // Odometer increment; false once every interpretation has been visited.
  bool next() {
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (++digits_[i] < radix(i)) return true;
      digits_[i] = 0;
    }
    return false;
  }

  template <class Rng>
  void randomize(Rng& rng) {
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      digits_[i] = std::uniform_int_distribution<std::size_t>(0, radix(i) - 1)(rng);
    }
  }

  bool eval(const std::vector<Node>& prog, std::size_t at) {
    const Node& node = prog[at];
    switch (node.kind) {
      case Formula::Kind::Top:
        return true;
      case Formula::Kind::Bot:
        return false;
      case Formula::Kind::Not:
        return !eval(prog, node.a);
      case Formula::Kind::And:
        return eval(prog, node.a) && eval(prog, node.b);
      case Formula::Kind::Or:
        return eval(prog, node.a) || eval(prog, node.b);
      case Formula::Kind::Exists:
        for (std::size_t v = 0; v < n_; ++v) {
          slots_[node.slot] = v;
          if (eval(prog, node.a)) return true;
        }
        return false;
      case Formula::Kind::Atom: {
        std::size_t cell = 0;
        for (const auto& a : node.args) cell = cell * n_ + value(a);
        return digits_[pred_offset_[node.pred] + cell] != 0;
      }
    }
    return false;
  }

 private:
  std::size_t power(std::size_t k) const {
    std::size_t p = 1;
    for (std::size_t i = 0; i < k; ++i) p *= n_;
    return p;
  }

  std::size_t value(const Arg& a) const {
    switch (a.kind) {
      case Arg::Kind::Const:
        return digits_[a.index];
      case Arg::Kind::Slot:
        return slots_[a.index];
      case Arg::Kind::Fn: {
        std::size_t cell = 0;
        for (std::size_t s : a.slots) cell = cell * n_ + slots_[s];
        return digits_[fn_offset_[a.index] + cell];
      }
    }
    return 0;
  }

  std::size_t n_;
  std::size_t consts_ = 0;
  std::size_t pred_end_ = 0;
  std::vector<std::size_t> pred_offset_;
  std::vector<std::size_t> fn_offset_;
  std::vector<std::size_t> digits_;
  std::vector<std::size_t> slots_;
};

}  // namespace

bool logically_equiv(const Formula& f1, const Formula& f2, std::size_t domain_size, OracleMode mode) {
  if (domain_size < 1 || domain_size > 4) throw std::invalid_argument("domain size must be between 1 and 4");
  Vocabulary sig;
  Compiler compiler(sig);
  std::vector<Node> p1, p2;
  std::size_t r1 = compiler.compile(f1, p1);
  std::size_t r2 = compiler.compile(f2, p2);
  Model model(sig, domain_size);

  std::size_t max_arity = 0;
  for (std::size_t a : sig.pred_arity) max_arity = std::max(max_arity, a);
  const bool small = max_arity <= kMaxExhaustiveArity && sig.preds.size() <= kMaxExhaustivePredicates &&
                     model.log2_size() <= kMaxExhaustiveLog2;
  if (mode == OracleMode::Exhaustive && !small) {
    throw SignatureTooLarge("signature too large for exhaustive model checking");
  }
  if (mode == OracleMode::Exhaustive || (mode == OracleMode::Auto && small)) {
    do {
      if (model.eval(p1, r1) != model.eval(p2, r2)) return false;
    } while (model.next());
    return true;
  }
  std::mt19937_64 rng(0x5eed);
  for (std::size_t i = 0; i < kOracleSamples; ++i) {
    model.randomize(rng);
    if (model.eval(p1, r1) != model.eval(p2, r2)) return false;
  }
  return true;
}

}  // namespace contsem
