#include "contsem/term_syntax.hpp"

#include <cctype>
#include <vector>

#include "contsem/errors.hpp"

namespace contsem {

const TypeAliases& builtin_type_aliases() {
  static const TypeAliases aliases = {
      {"kb", kappa_b()},    {"kc", kappa_c()},    {"sa", sentence_a()},
      {"sb", sentence_b()}, {"sc", sentence_c()},
  };
  return aliases;
}

namespace {

enum class Tok {
  Ident,
  Lambda,   // backslash
  Dot,
  Colon,
  LParen,
  RParen,
  Arrow,    // >
  And,      // &
  Or,       // |
  Not,      // ~
  Cons,     // ::
  Union,    // ++
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t start = i;
      while (i < text.size() && ident_char(text[i])) ++i;
      out.push_back({Tok::Ident, std::string(text.substr(start, i - start)), start});
      continue;
    }
    auto two = text.substr(i, 2);
    if (two == "::") {
      out.push_back({Tok::Cons, "::", i});
      i += 2;
      continue;
    }
    if (two == "++") {
      out.push_back({Tok::Union, "++", i});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '\\': kind = Tok::Lambda; break;
      case '.': kind = Tok::Dot; break;
      case ':': kind = Tok::Colon; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '>': kind = Tok::Arrow; break;
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

class Parser {
 public:
  Parser(std::string_view text, const Signature* signature, const TypeAliases& aliases)
      : tokens_(lex(text)), signature_(signature), aliases_(aliases) {}

  SemType type_only() {
    SemType type = parse_type();
    expect(Tok::End, "end of input");
    return type;
  }

  Term term_only() {
    Term term = parse_expr();
    expect(Tok::End, "end of input");
    return term;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  bool at(Tok kind, std::size_t ahead = 0) const { return peek(ahead).kind == kind; }
  const Token& advance() { return tokens_[pos_++]; }

  const Token& expect(Tok kind, const char* what) {
    if (!at(kind)) {
      const Token& tok = peek();
      throw SyntaxError(tok.pos, std::string("expected ") + what +
                                     (tok.kind == Tok::End ? ", found end of input"
                                                           : ", found '" + tok.text + "'"));
    }
    return advance();
  }

  // type := atom ('>' type)?
  SemType parse_type() {
    SemType left = parse_type_atom();
    if (at(Tok::Arrow)) {
      advance();
      return SemType::arrow(left, parse_type());
    }
    return left;
  }

  SemType parse_type_atom() {
    if (at(Tok::LParen)) {
      advance();
      SemType inner = parse_type();
      expect(Tok::RParen, "')'");
      return inner;
    }
    const Token& tok = expect(Tok::Ident, "a type");
    if (tok.text == "e") return SemType::e();
    if (tok.text == "t") return SemType::t();
    if (tok.text == "g") return SemType::g();
    auto it = aliases_.find(tok.text);
    if (it != aliases_.end()) return it->second;
    throw SyntaxError(tok.pos, "unknown type '" + tok.text + "'");
  }

  bool at_exists_binder() const {
    return at(Tok::Ident) && peek().text == builtin::kExists && at(Tok::Ident, 1) &&
           (at(Tok::Dot, 2) || at(Tok::Colon, 2));
  }

  Term parse_expr() {
    if (at(Tok::Lambda)) return parse_lambda();
    if (at_exists_binder()) return parse_exists();
    return parse_or();
  }

  // '\' (name ':' type)+ '.' expr
  Term parse_lambda() {
    expect(Tok::Lambda, "'\\'");
    std::vector<SemType> binders;
    do {
      const Token& name = expect(Tok::Ident, "a binder name");
      check_binder_name(name);
      expect(Tok::Colon, "':'");
      binders.push_back(parse_type());
      scope_.push_back(name.text);
    } while (at(Tok::Ident));
    expect(Tok::Dot, "'.'");
    Term body = parse_expr();
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      body = Term::lam(*it, std::move(body));
      scope_.pop_back();
    }
    return body;
  }

  // 'Ex' name (':' 'e')? '.' expr   ==   Ex (\name:e. expr)
  Term parse_exists() {
    advance();
    const Token& name = expect(Tok::Ident, "a binder name");
    check_binder_name(name);
    if (at(Tok::Colon)) {
      const std::size_t where = advance().pos;
      if (parse_type() != SemType::e()) throw SyntaxError(where, "Ex binds an entity (type e)");
    }
    expect(Tok::Dot, "'.'");
    scope_.push_back(name.text);
    Term body = parse_expr();
    scope_.pop_back();
    return Term::app(builtin::exists(), Term::lam(SemType::e(), std::move(body)));
  }

  void check_binder_name(const Token& name) const {
    if (builtin::is_reserved(name.text)) {
      throw SyntaxError(name.pos, "'" + name.text + "' is reserved and cannot be bound");
    }
  }

  Term parse_or() {
    Term left = parse_and();
    if (at(Tok::Or)) {
      advance();
      return Term::apply(builtin::or_(), {left, parse_or_operand()});
    }
    return left;
  }

  Term parse_or_operand() {
    if (at(Tok::Lambda)) return parse_lambda();
    if (at_exists_binder()) return parse_exists();
    return parse_or();
  }

  Term parse_and() {
    Term left = parse_unary();
    if (at(Tok::And)) {
      advance();
      Term right = (at(Tok::Lambda) || at_exists_binder()) ? parse_expr() : parse_and();
      return Term::apply(builtin::and_(), {left, right});
    }
    return left;
  }

  Term parse_unary() {
    if (at(Tok::Not)) {
      advance();
      Term operand = (at(Tok::Lambda) || at_exists_binder()) ? parse_expr() : parse_unary();
      return Term::app(builtin::not_(), operand);
    }
    return parse_union();
  }

  Term parse_union() {
    Term left = parse_cons();
    if (at(Tok::Union)) {
      advance();
      return Term::apply(builtin::union_(), {left, parse_union()});
    }
    return left;
  }

  Term parse_cons() {
    Term left = parse_app();
    if (at(Tok::Cons)) {
      advance();
      return Term::apply(builtin::cons(), {left, parse_cons()});
    }
    return left;
  }

  bool at_atom_start() const { return at(Tok::Ident) || at(Tok::LParen); }

  Term parse_app() {
    if (!at_atom_start()) {
      const Token& tok = peek();
      throw SyntaxError(tok.pos, tok.kind == Tok::End ? "unexpected end of input"
                                                       : "unexpected '" + tok.text + "'");
    }
    Term head = parse_atom();
    while (true) {
      if (at(Tok::Lambda) || at_exists_binder()) {
        head = Term::app(std::move(head), parse_expr());
        break;
      }
      if (!at_atom_start()) break;
      head = Term::app(std::move(head), parse_atom());
    }
    return head;
  }

  Term parse_atom() {
    if (at(Tok::LParen)) {
      // Bare operator sections: (&) (|) (~) (::) (++)
      if (at(Tok::RParen, 2)) {
        switch (peek(1).kind) {
          case Tok::And: pos_ += 3; return builtin::and_();
          case Tok::Or: pos_ += 3; return builtin::or_();
          case Tok::Not: pos_ += 3; return builtin::not_();
          case Tok::Cons: pos_ += 3; return builtin::cons();
          case Tok::Union: pos_ += 3; return builtin::union_();
          default: break;
        }
      }
      advance();
      Term inner = parse_expr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    const Token& tok = expect(Tok::Ident, "an identifier");
    for (std::size_t i = scope_.size(); i-- > 0;) {
      if (scope_[i] == tok.text) return Term::var(scope_.size() - 1 - i);
    }
    if (signature_ != nullptr) {
      if (auto c = signature_->lookup(tok.text)) return *c;
    }
    throw UnknownIdentifier(tok.pos, tok.text);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Signature* signature_;
  const TypeAliases& aliases_;
  std::vector<std::string> scope_;
};

// Printer precedence levels; higher binds tighter.
enum Level : int {
  kBinder = 0,  // \x:T. body  and  Ex x. body
  kDisj = 1,
  kConj = 2,
  kUnary = 3,
  kUnionLevel = 4,
  kConsLevel = 5,
  kApp = 6,
  kAtom = 7,
};

class Printer {
 public:
  std::string print(const Term& term, int required) {
    int level = 0;
    std::string text = render(term, level);
    if (level < required) return "(" + text + ")";
    return text;
  }

 private:
  std::string fresh() { return "x" + std::to_string(++counter_); }

  std::string name_of(std::size_t index) const {
    if (index >= names_.size()) return "?" + std::to_string(index);
    return names_[names_.size() - 1 - index];
  }

  static std::string constant_text(const Term& c) {
    const std::string& n = c.name();
    if (n == builtin::kAnd || n == builtin::kOr || n == builtin::kNot || n == builtin::kCons ||
        n == builtin::kUnion) {
      return "(" + n + ")";
    }
    return n;
  }

  std::string binder(const Term& lam, int& level) {
    std::string name = fresh();
    std::string head = "\\" + name + ":" + lam.annotation().str() + ". ";
    names_.push_back(name);
    std::string body = print(lam.body(), kBinder);
    names_.pop_back();
    level = kBinder;
    return head + body;
  }

  std::string render(const Term& term, int& level) {
    switch (term.kind()) {
      case Term::Kind::Var:
        level = kAtom;
        return name_of(term.index());
      case Term::Kind::Const:
        level = kAtom;
        return constant_text(term);
      case Term::Kind::Lam:
        return binder(term, level);
      case Term::Kind::App:
        break;
    }

    Spine sp = spine(term);
    const Term& head = sp.head;
    const auto& args = sp.args;
    if (head.is_const()) {
      const std::string& n = head.name();
      if (args.size() == 2 && (n == builtin::kAnd || n == builtin::kOr)) {
        const bool is_and = n == builtin::kAnd;
        std::string left = print(args[0], is_and ? kUnary : kConj);
        std::string right = print(args[1], is_and ? kConj : kDisj);
        level = is_and ? kConj : kDisj;
        return left + " " + n + " " + right;
      }
      if (args.size() == 2 && n == builtin::kUnion) {
        std::string left = print(args[0], kConsLevel);
        std::string right = print(args[1], kUnionLevel);
        level = kUnionLevel;
        return left + " ++ " + right;
      }
      if (args.size() == 2 && n == builtin::kCons) {
        std::string left = print(args[0], kApp);
        std::string right = print(args[1], kConsLevel);
        level = kConsLevel;
        return left + "::" + right;
      }
      if (args.size() == 1 && n == builtin::kNot) {
        level = kUnary;
        return "~ " + print(args[0], kUnary);
      }
      if (args.size() == 1 && n == builtin::kExists && args[0].is_lam() &&
          args[0].annotation() == SemType::e()) {
        std::string name = fresh();
        names_.push_back(name);
        std::string body = print(args[0].body(), kBinder);
        names_.pop_back();
        level = kBinder;
        return "Ex " + name + ". " + body;
      }
    }
    std::string out = print(head, kAtom);
    for (const auto& a : args) out += " " + print(a, kAtom);
    level = kApp;
    return out;
  }

  std::vector<std::string> names_;
  std::size_t counter_ = 0;
};

}  // namespace

SemType parse_type(std::string_view text, const TypeAliases& aliases) {
  return Parser(text, nullptr, aliases).type_only();
}

Term parse_term(std::string_view text, const Signature& signature, const TypeAliases& aliases) {
  return Parser(text, &signature, aliases).term_only();
}

std::string pretty(const Term& term) { return Printer().print(term, kBinder); }

}  // namespace contsem
