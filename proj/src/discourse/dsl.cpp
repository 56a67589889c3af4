#include "contsem/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "contsem/errors.hpp"
#include "contsem/term_syntax.hpp"

namespace contsem {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) --e;
  return std::string(s.substr(b, e - b));
}

bool is_ident_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) != 0 || ch == '_'; }

bool valid_ident(const std::string& s) {
  return !s.empty() && std::isdigit(static_cast<unsigned char>(s[0])) == 0 &&
         std::all_of(s.begin(), s.end(), is_ident_char);
}

// Splits "key rest" at the first blank.
std::pair<std::string, std::string> head_word(const std::string& line) {
  std::size_t i = 0;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])) == 0 && line[i] != '=') ++i;
  return {line.substr(0, i), trim(std::string_view(line).substr(i))};
}

// "= value" -> value
std::string after_equals(const std::string& rest, std::size_t line, const char* directive) {
  if (rest.empty() || rest[0] != '=') throw SourceError(line, std::string("expected '=' after ") + directive);
  std::string value = trim(std::string_view(rest).substr(1));
  if (value.empty()) throw SourceError(line, std::string("empty ") + directive);
  return value;
}

class ExprParser {
 public:
  ExprParser(const std::string& text, std::size_t line, const std::map<std::string, SentenceAST>& sentences,
             bool symbolic)
      : text_(text), line_(line), sentences_(sentences), symbolic_(symbolic) {}

  DiscourseTree run() {
    DiscourseTree t = expr();
    skip();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SourceError(line_, msg + " at column " + std::to_string(pos_ + 1));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  DiscourseTree expr() {
    DiscourseTree left = unit();
    skip();
    if (pos_ >= text_.size() || text_[pos_] != '.') return left;
    ++pos_;
    char rel = 0;
    if (pos_ < text_.size() && (text_[pos_] == 'c' || text_[pos_] == 's') &&
        (pos_ + 1 >= text_.size() || !is_ident_char(text_[pos_ + 1]))) {
      rel = text_[pos_++];
    }
    DiscourseTree right = expr();
    if (rel == 'c') return DiscourseTree::coord(std::move(left), std::move(right));
    if (rel == 's') return DiscourseTree::sub(std::move(left), std::move(right));
    return DiscourseTree::seq(std::move(left), std::move(right));
  }

  DiscourseTree unit() {
    skip();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      DiscourseTree inner = expr();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a sentence id");
    std::string id = text_.substr(start, pos_ - start);
    auto it = sentences_.find(id);
    if (it != sentences_.end()) return DiscourseTree::leaf(it->second);
    if (symbolic_) return DiscourseTree::symbol(id);
    pos_ = start;
    fail("undefined sentence '" + id + "'");
  }

  const std::string& text_;
  std::size_t line_;
  const std::map<std::string, SentenceAST>& sentences_;
  bool symbolic_;
  std::size_t pos_ = 0;
};

}  // namespace

DslDocument parse_document(std::string_view text) {
  DslDocument doc;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  auto once = [&](auto& slot, const char* directive) {
    if (slot) throw SourceError(line, std::string("duplicate ") + directive);
  };
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string content = trim(raw);
    if (content.empty()) continue;
    auto [key, rest] = head_word(content);
    if (key == "profile") {
      once(doc.profile, "profile");
      try {
        doc.profile = DslDocument::Located<Profile>{parse_profile(rest), line};
      } catch (const std::invalid_argument& e) {
        throw SourceError(line, e.what());
      }
    } else if (key == "symbolic") {
      if (!rest.empty()) throw SourceError(line, "'symbolic' takes no argument");
      doc.symbolic = true;
    } else if (key == "negation") {
      if (rest != "rejected") throw SourceError(line, "expected 'negation rejected'");
      doc.rejected_negation = true;
    } else if (key == "lexicon") {
      doc.lexicon.push_back({rest, line});
    } else if (key == "sentence") {
      auto [id, def] = head_word(rest);
      if (!valid_ident(id)) throw SourceError(line, "expected a sentence id");
      for (const auto& s : doc.sentences) {
        if (s.id == id) throw SourceError(line, "sentence '" + id + "' is already defined");
      }
      doc.sentences.push_back({id, after_equals(def, line, "sentence"), line});
    } else if (key == "discourse") {
      once(doc.discourse, "discourse");
      doc.discourse = DslDocument::Located<std::string>{after_equals(rest, line, "discourse"), line};
    } else if (key == "init") {
      once(doc.init, "init");
      doc.init = DslDocument::Located<std::string>{after_equals(rest, line, "init"), line};
    } else if (key == "term") {
      once(doc.term, "term");
      doc.term = DslDocument::Located<std::string>{after_equals(rest, line, "term"), line};
    } else if (key == "const") {
      auto colon = rest.find(':');
      if (colon == std::string::npos) throw SourceError(line, "expected 'const name : type'");
      std::string name = trim(std::string_view(rest).substr(0, colon));
      std::string type = trim(std::string_view(rest).substr(colon + 1));
      if (!valid_ident(name) || type.empty()) throw SourceError(line, "expected 'const name : type'");
      doc.constants.push_back({name, type, line});
    } else {
      throw SourceError(line, "unknown directive '" + key + "'");
    }
  }
  if (doc.term && doc.discourse) {
    throw SourceError(doc.term->line, "a file holds either a term or a discourse, not both");
  }
  if (!doc.term && !doc.discourse) throw SourceError(line, "missing 'discourse = ...' line");
  return doc;
}

Lexicon document_lexicon(const DslDocument& doc, Profile p, bool rejected_negation) {
  Lexicon lex = Lexicon::standard(p);
  for (const auto& entry : doc.lexicon) {
    try {
      lex = extend(lex, entry.value);
    } catch (const Error& e) {
      throw SourceError(entry.line, e.what());
    } catch (const std::invalid_argument& e) {
      throw SourceError(entry.line, e.what());
    }
  }
  if (rejected_negation || doc.rejected_negation) {
    try {
      lex = lex.with_rejected_negation();
    } catch (const Error& e) {
      throw SourceError(doc.profile ? doc.profile->line : 1, e.what());
    }
  }
  return lex;
}

DiscourseTree document_tree(const DslDocument& doc, const Lexicon& lexicon, bool symbolic) {
  if (!doc.discourse) throw SourceError(1, "missing 'discourse = ...' line");
  std::map<std::string, SentenceAST> sentences;
  for (const auto& s : doc.sentences) {
    try {
      sentences.emplace(s.id, parse_sentence(s.text, lexicon));
    } catch (const Error& e) {
      throw SourceError(s.line, "sentence " + s.id + ": " + e.what());
    }
  }
  return ExprParser(doc.discourse->value, doc.discourse->line, sentences, symbolic || doc.symbolic).run();
}

Signature document_signature(const DslDocument& doc, const Lexicon& lexicon) {
  Signature sig = lexicon.signature();
  for (const auto& c : doc.constants) {
    try {
      sig.declare(c.name, parse_type(c.type, profile_aliases(lexicon.profile())));
    } catch (const Error& e) {
      throw SourceError(c.line, e.what());
    } catch (const std::invalid_argument& e) {
      throw SourceError(c.line, e.what());
    }
  }
  return sig;
}

}  // namespace contsem
