#include "contsem/formula_syntax.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "contsem/errors.hpp"

namespace contsem {

namespace {

bool is_binary(const Formula& f) { return f.is(Formula::Kind::And) || f.is(Formula::Kind::Or); }

// Printed text of `f` ends in a binder body that would swallow anything to its right.
bool open_ended(const Formula& f) {
  if (f.is(Formula::Kind::Exists)) return true;
  if (f.is(Formula::Kind::Not)) return open_ended(f.operand());
  return false;
}

std::string wrap(const std::string& s) { return "(" + s + ")"; }

std::string env_operand(const EnvExpr& env) {
  std::string s = to_text(env);
  return env.kind() == EnvExpr::Kind::Nil ? s : wrap(s);
}

}  // namespace

std::string to_text(const EnvExpr& env) {
  switch (env.kind()) {
    case EnvExpr::Kind::Nil:
      return "nil";
    case EnvExpr::Kind::Cons: {
      std::string tail = to_text(env.tail());
      if (env.tail().kind() == EnvExpr::Kind::Union) tail = wrap(tail);
      return to_text(env.head()) + "::" + tail;
    }
    case EnvExpr::Kind::Union: {
      std::string right = to_text(env.right());
      if (env.right().kind() == EnvExpr::Kind::Cons) right = wrap(right);
      return env_operand(env.left()) + " ++ " + right;
    }
  }
  return "?";
}

std::string to_text(const EntityTerm& t) {
  if (t.kind() == EntityTerm::Kind::Sel) return "sel(" + to_text(t.env()) + ")";
  return t.name();
}

std::string to_text(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Top:
      return "top";
    case Formula::Kind::Bot:
      return "bot";
    case Formula::Kind::Atom: {
      const auto& args = f.args();
      if (args.empty()) return f.predicate();
      const bool functional = std::any_of(args.begin(), args.end(), [](const EntityTerm& a) {
        return a.kind() == EntityTerm::Kind::Sel;
      });
      std::string out = f.predicate();
      if (functional) {
        out += "(";
        for (std::size_t i = 0; i < args.size(); ++i) {
          if (i > 0) out += ", ";
          out += to_text(args[i]);
        }
        return out + ")";
      }
      for (const auto& a : args) out += " " + to_text(a);
      return out;
    }
    case Formula::Kind::Not: {
      std::string inner = to_text(f.operand());
      return "~ " + (is_binary(f.operand()) ? wrap(inner) : inner);
    }
    case Formula::Kind::Exists: {
      std::string body = to_text(f.body());
      return "Ex " + f.var() + ". " + (is_binary(f.body()) ? wrap(body) : body);
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      const std::string op = f.is(Formula::Kind::And) ? " & " : " | ";
      std::string left = to_text(f.left());
      if (is_binary(f.left()) || open_ended(f.left())) left = wrap(left);
      std::string right = to_text(f.right());
      if (is_binary(f.right()) && f.right().kind() != f.kind()) right = wrap(right);
      return left + op + right;
    }
  }
  return "?";
}

namespace {

enum class Tok { Ident, Dot, Comma, LParen, RParen, And, Or, Not, Cons, Union, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) != 0 ||
                                 text[i] == '_' || text[i] == '\'')) {
        ++i;
      }
      out.push_back({Tok::Ident, std::string(text.substr(start, i - start)), start});
      continue;
    }
    auto two = text.substr(i, 2);
    if (two == "::" || two == "++") {
      out.push_back({two == "::" ? Tok::Cons : Tok::Union, std::string(two), i});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '.': kind = Tok::Dot; break;
      case ',': kind = Tok::Comma; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '&': kind = Tok::And; break;
      case '|': kind = Tok::Or; break;
      case '~': kind = Tok::Not; break;
      default:
        throw SyntaxError(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : tokens_(lex(text)) {}

  Formula run() {
    Formula f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(Tok k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }
  bool at_word(std::string_view w) const { return at(Tok::Ident) && peek().text == w; }
  const Token& advance() { return tokens_[pos_++]; }
  const Token& expect(Tok k, const char* what) {
    if (!at(k)) {
      throw SyntaxError(peek().pos, std::string("expected ") + what);
    }
    return advance();
  }

  bool at_binder() const { return at_word("Ex") && at(Tok::Ident, 1) && at(Tok::Dot, 2); }

  Formula formula() {
    if (at_binder()) return exists();
    return disjunction();
  }

  Formula exists() {
    advance();
    std::string var = expect(Tok::Ident, "a variable").text;
    expect(Tok::Dot, "'.'");
    bound_.push_back(var);
    Formula body = formula();
    bound_.pop_back();
    return Formula::exists(std::move(var), std::move(body));
  }

  Formula disjunction() {
    Formula left = conjunction();
    if (at(Tok::Or)) {
      advance();
      return Formula::disjunction(std::move(left), at_binder() ? exists() : disjunction());
    }
    return left;
  }

  Formula conjunction() {
    Formula left = unary();
    if (at(Tok::And)) {
      advance();
      return Formula::conjunction(std::move(left), at_binder() ? exists() : conjunction());
    }
    return left;
  }

  Formula unary() {
    if (at(Tok::Not)) {
      advance();
      return Formula::negation(at_binder() ? exists() : unary());
    }
    if (at_binder()) return exists();
    if (at(Tok::LParen)) {
      advance();
      Formula inner = formula();
      expect(Tok::RParen, "')'");
      return inner;
    }
    return atom();
  }

  Formula atom() {
    const Token& name = expect(Tok::Ident, "a predicate");
    if (name.text == "top") return Formula::top();
    if (name.text == "bot") return Formula::bot();
    std::vector<EntityTerm> args;
    if (at(Tok::LParen)) {
      advance();
      args.push_back(entity());
      while (at(Tok::Comma)) {
        advance();
        args.push_back(entity());
      }
      expect(Tok::RParen, "')'");
      return Formula::atom(name.text, std::move(args));
    }
    while (at(Tok::Ident) && !at_binder()) args.push_back(entity());
    return Formula::atom(name.text, std::move(args));
  }

  EntityTerm entity() {
    const Token& name = expect(Tok::Ident, "an entity");
    if (name.text == "sel") {
      expect(Tok::LParen, "'('");
      EnvExpr env = environment();
      expect(Tok::RParen, "')'");
      return EntityTerm::sel(std::move(env), next_site_++);
    }
    if (std::find(bound_.begin(), bound_.end(), name.text) != bound_.end()) {
      return EntityTerm::variable(name.text);
    }
    return EntityTerm::constant(name.text);
  }

  // env := cons ('++' env)?
  EnvExpr environment() {
    EnvExpr left = env_cons();
    if (at(Tok::Union)) {
      advance();
      return EnvExpr::union_of(std::move(left), environment());
    }
    return left;
  }

  // cons := 'nil' | '(' env ')' | entity '::' cons
  EnvExpr env_cons() {
    if (at(Tok::LParen)) {
      advance();
      EnvExpr inner = environment();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (at_word("nil")) {
      advance();
      return EnvExpr::nil();
    }
    EntityTerm head = entity();
    expect(Tok::Cons, "'::'");
    return EnvExpr::cons(std::move(head), env_cons());
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> bound_;
  std::size_t next_site_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).run(); }

nlohmann::json to_json(const EnvExpr& env) {
  switch (env.kind()) {
    case EnvExpr::Kind::Nil:
      return {{"tag", "nil"}};
    case EnvExpr::Kind::Cons:
      return {{"tag", "cons"}, {"head", to_json(env.head())}, {"tail", to_json(env.tail())}};
    case EnvExpr::Kind::Union:
      return {{"tag", "union"}, {"left", to_json(env.left())}, {"right", to_json(env.right())}};
  }
  return nullptr;
}

nlohmann::json to_json(const EntityTerm& t) {
  switch (t.kind()) {
    case EntityTerm::Kind::Const:
      return {{"tag", "const"}, {"name", t.name()}};
    case EntityTerm::Kind::Var:
      return {{"tag", "var"}, {"name", t.name()}};
    case EntityTerm::Kind::Sel:
      return {{"tag", "sel"}, {"site", t.site()}, {"env", to_json(t.env())}};
  }
  return nullptr;
}

nlohmann::json to_json(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Top:
      return {{"tag", "top"}};
    case Formula::Kind::Bot:
      return {{"tag", "bot"}};
    case Formula::Kind::Not:
      return {{"tag", "not"}, {"operand", to_json(f.operand())}};
    case Formula::Kind::And:
      return {{"tag", "and"}, {"left", to_json(f.left())}, {"right", to_json(f.right())}};
    case Formula::Kind::Or:
      return {{"tag", "or"}, {"left", to_json(f.left())}, {"right", to_json(f.right())}};
    case Formula::Kind::Exists:
      return {{"tag", "exists"}, {"var", f.var()}, {"body", to_json(f.body())}};
    case Formula::Kind::Atom: {
      nlohmann::json args = nlohmann::json::array();
      for (const auto& a : f.args()) args.push_back(to_json(a));
      return {{"tag", "atom"}, {"pred", f.predicate()}, {"args", std::move(args)}};
    }
  }
  return nullptr;
}

}  // namespace contsem
