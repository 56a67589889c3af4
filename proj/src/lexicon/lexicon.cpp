#include "contsem/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "contsem/errors.hpp"

namespace contsem {

namespace {

// Placeholder content constant, renamed on instantiation.
constexpr std::string_view kPlaceholder = "pred";

struct Template {
  Category category;
  const char* text;
};

// Profile A: environments only.
const Template kTemplatesA[] = {
    {Category::ProperNoun, R"(\P:n e:g f:cont. P pred e f)"},
    {Category::CommonNoun, R"(\x:e e:g f:cont. pred x & f e)"},
    {Category::TransitiveVerb, R"(\O:np S:np. S (\x:e. O (\y:e e:g f:cont. pred x y & f e)))"},
    {Category::IntransitiveVerb, R"(\S:np. S (\x:e e:g f:cont. pred x & f e))"},
    {Category::Adjective, R"(\P:n x:e e:g f:cont. P x e f & pred x)"},
    {Category::Pronoun, R"(\P:n e:g f:cont. P (sel e) e f)"},
};

const Template kFixedA[] = {
    {Category::Determiner, R"(\P:n Q:n e:g f:cont. Ex x. P x e (\d:g. Q x (x::d) f))"},
    {Category::Copula, R"(\A:adj S:np. S (\x:e e:g f:cont. A (\y:e d:g h:cont. top) x e f & f e))"},
    {Category::NegationAux, R"(\V:vp S:np e:g f:cont. ~(V S e (\d:g. top)) & f e)"},
};

const char* const kRejectedNegationA = R"(\V:vp S:np e:g f:cont. ~(V S e (\d:g. f d)))";

// Profile B: connective, proper-noun environment e1, existential environment e2.
const Template kTemplatesB[] = {
    {Category::ProperNoun, R"(\P:n c:k e1:g e2:g f:cont. P pred c (pred::e1) e2 f)"},
    {Category::CommonNoun, R"(\x:e c:k e1:g e2:g f:cont. c (pred x) (f c e1 e2))"},
    {Category::TransitiveVerb,
     R"(\O:np S:np. S (\x:e. O (\y:e c:k e1:g e2:g f:cont. c (pred x y) (f c e1 e2))))"},
    {Category::IntransitiveVerb, R"(\S:np. S (\x:e c:k e1:g e2:g f:cont. c (pred x) (f c e1 e2)))"},
    {Category::Adjective, R"(\P:n x:e c:k e1:g e2:g f:cont. P x c e1 e2 f & pred x)"},
    {Category::Pronoun, R"(\P:n c:k e1:g e2:g f:cont. P (sel (e1 ++ e2)) c e1 e2 f)"},
};

const Template kFixedB[] = {
    {Category::Determiner,
     R"(\P:n Q:n c:k e1:g e2:g f:cont. Ex x.
          (\h:cont. P x c e1 e2 h & Q x c e1 e2 h) (\c2:k d1:g d2:g. f c d1 (x::d2)))"},
    {Category::Copula,
     R"(\A:adj S:np. S (\x:e c:k e1:g e2:g f:cont.
          c (A (\y:e c2:k d1:g d2:g h:cont. top) x c e1 e2 f) (f c e1 e2)))"},
    {Category::NegationAux,
     R"(\V:vp S:np c:k e1:g e2:g f:cont. ~(V S (dual c) e1 e2 (\c2:k d1:g d2:g. ~(f c2 d1 e2))))"},
};

// Profile C: referents introduced by a unit go to e1; pronouns read e1 ++ e2.
const Template kTemplatesC[] = {
    {Category::ProperNoun, R"(\P:n c:k e1:g e2:g f:cont. P pred c (pred::e1) e2 f)"},
    {Category::CommonNoun, R"(\x:e c:k e1:g e2:g f:cont. pred x & f c e1 e2)"},
    {Category::TransitiveVerb,
     R"(\O:np S:np. S (\x:e. O (\y:e c:k e1:g e2:g f:cont. pred x y & f c e1 e2)))"},
    {Category::IntransitiveVerb, R"(\S:np. S (\x:e c:k e1:g e2:g f:cont. pred x & f c e1 e2))"},
    {Category::Adjective, R"(\P:n x:e c:k e1:g e2:g f:cont. P x c e1 e2 f & pred x)"},
    {Category::Pronoun, R"(\P:n c:k e1:g e2:g f:cont. P (sel (e1 ++ e2)) c e1 e2 f)"},
};

const Template kFixedC[] = {
    {Category::Determiner,
     R"(\P:n Q:n c:k e1:g e2:g f:cont. Ex x. P x c e1 e2 (\c2:k d1:g d2:g. Q x c2 (x::d1) d2 f))"},
    {Category::Copula,
     R"(\A:adj S:np. S (\x:e c:k e1:g e2:g f:cont.
          A (\y:e c2:k d1:g d2:g h:cont. top) x c e1 e2 f & f c e1 e2))"},
};

struct Shipped {
  const char* word;
  Category category;
  const char* content;  // nullptr for function words
};

const Shipped kShippedA[] = {
    {"john", Category::ProperNoun, "j"}, {"love", Category::TransitiveVerb, "love"},
    {"woman", Category::CommonNoun, "woman"}, {"own", Category::TransitiveVerb, "own"},
    {"car", Category::CommonNoun, "car"}, {"red", Category::Adjective, "red"},
    {"it", Category::Pronoun, nullptr}, {"a", Category::Determiner, nullptr},
    {"is", Category::Copula, nullptr}, {"doesnt", Category::NegationAux, nullptr},
};

const Shipped kShippedB[] = {
    {"john", Category::ProperNoun, "j"}, {"own", Category::TransitiveVerb, "own"},
    {"car", Category::CommonNoun, "car"}, {"red", Category::Adjective, "red"},
    {"it", Category::Pronoun, nullptr}, {"a", Category::Determiner, nullptr},
    {"is", Category::Copula, nullptr}, {"doesnt", Category::NegationAux, nullptr},
};

const Shipped kShippedC[] = {
    {"john", Category::ProperNoun, "j"}, {"own", Category::TransitiveVerb, "own"},
    {"car", Category::CommonNoun, "car"}, {"woman", Category::CommonNoun, "woman"},
    {"love", Category::TransitiveVerb, "love"}, {"red", Category::Adjective, "red"},
    {"it", Category::Pronoun, nullptr}, {"a", Category::Determiner, nullptr},
    {"is", Category::Copula, nullptr},
};

template <std::size_t N>
std::optional<const char*> find_template(const Template (&table)[N], Category c) {
  for (const auto& t : table) {
    if (t.category == c) return t.text;
  }
  return std::nullopt;
}

std::optional<const char*> template_text(Category c, Profile p) {
  switch (p) {
    case Profile::A:
      if (auto t = find_template(kTemplatesA, c)) return t;
      return find_template(kFixedA, c);
    case Profile::B:
      if (auto t = find_template(kTemplatesB, c)) return t;
      return find_template(kFixedB, c);
    case Profile::C:
      if (auto t = find_template(kTemplatesC, c)) return t;
      return find_template(kFixedC, c);
  }
  return std::nullopt;
}

bool is_template_category(Category c) {
  return c != Category::Determiner && c != Category::Copula && c != Category::NegationAux;
}

// Type of the content constant a template abstracts over.
std::optional<SemType> content_type(Category c) {
  const SemType e = SemType::e();
  const SemType t = SemType::t();
  switch (c) {
    case Category::ProperNoun:
      return e;
    case Category::CommonNoun:
    case Category::IntransitiveVerb:
    case Category::Adjective:
      return SemType::arrow(e, t);
    case Category::TransitiveVerb:
      return SemType::chain({e, e, t});
    default:
      return std::nullopt;
  }
}

Term build(const char* text, Category c, Profile p, const std::string& content) {
  Signature sig;
  auto type = content_type(c);
  if (type) sig.declare(std::string(kPlaceholder), *type);
  Term term = parse_term(text, sig, profile_aliases(p));
  if (typecheck(term) != category_type(c, p)) {
    throw std::logic_error("entry for " + to_string(c) + " does not have its category type");
  }
  return type ? rename_constant(term, kPlaceholder, content) : term;
}

// Declares the non-builtin constants of `term` in `sig`.
void declare_content(const Term& term, Signature& sig) {
  if (term.is_const()) {
    if (!builtin::is_reserved(term.name())) sig.declare(term.name(), term.type());
  } else if (term.is_lam()) {
    declare_content(term.body(), sig);
  } else if (term.is_app()) {
    declare_content(term.fun(), sig);
    declare_content(term.arg(), sig);
  }
}

bool is_verb(Category c) { return c == Category::TransitiveVerb || c == Category::IntransitiveVerb; }

void check_word(const std::string& word) {
  const bool ok = !word.empty() && (std::islower(static_cast<unsigned char>(word[0])) != 0 || word[0] == '_') &&
                  std::all_of(word.begin(), word.end(), [](char ch) {
                    return std::islower(static_cast<unsigned char>(ch)) != 0 ||
                           std::isdigit(static_cast<unsigned char>(ch)) != 0 || ch == '_';
                  });
  if (!ok) throw std::invalid_argument("'" + word + "' is not a valid word");
}

}  // namespace

std::string to_string(Profile p) {
  switch (p) {
    case Profile::A: return "A";
    case Profile::B: return "B";
    case Profile::C: return "C";
  }
  return "?";
}

Profile parse_profile(std::string_view text) {
  if (text == "A" || text == "a") return Profile::A;
  if (text == "B" || text == "b") return Profile::B;
  if (text == "C" || text == "c") return Profile::C;
  throw std::invalid_argument("unknown profile '" + std::string(text) + "'");
}

std::string to_string(Category c) {
  switch (c) {
    case Category::ProperNoun: return "ProperNoun";
    case Category::CommonNoun: return "CommonNoun";
    case Category::TransitiveVerb: return "TransitiveVerb";
    case Category::IntransitiveVerb: return "IntransitiveVerb";
    case Category::Determiner: return "Determiner";
    case Category::Pronoun: return "Pronoun";
    case Category::Copula: return "Copula";
    case Category::Adjective: return "Adjective";
    case Category::NegationAux: return "NegationAux";
  }
  return "?";
}

Category parse_category(std::string_view text) {
  static const std::pair<std::string_view, Category> names[] = {
      {"pnoun", Category::ProperNoun}, {"noun", Category::CommonNoun},
      {"tverb", Category::TransitiveVerb}, {"iverb", Category::IntransitiveVerb},
      {"det", Category::Determiner}, {"pron", Category::Pronoun},
      {"copula", Category::Copula}, {"adj", Category::Adjective},
      {"neg", Category::NegationAux},
  };
  for (const auto& [name, c] : names) {
    if (name == text || to_string(c) == text) return c;
  }
  throw std::invalid_argument("unknown category '" + std::string(text) + "'");
}

SemType sentence_type(Profile p) {
  switch (p) {
    case Profile::A: return sentence_a();
    case Profile::B: return sentence_b();
    case Profile::C: return sentence_c();
  }
  return sentence_a();
}

SemType category_type(Category c, Profile p) {
  const SemType s = sentence_type(p);
  const SemType e = SemType::e();
  const SemType n = SemType::arrow(e, s);
  const SemType np = SemType::arrow(n, s);
  const SemType adj = SemType::arrow(n, n);
  switch (c) {
    case Category::ProperNoun:
    case Category::Pronoun:
      return np;
    case Category::CommonNoun:
      return n;
    case Category::TransitiveVerb:
      return SemType::chain({np, np, s});
    case Category::IntransitiveVerb:
      return SemType::arrow(np, s);
    case Category::Determiner:
      return SemType::chain({n, n, s});
    case Category::Adjective:
      return adj;
    case Category::Copula:
      return SemType::chain({adj, np, s});
    case Category::NegationAux:
      return SemType::chain({SemType::arrow(np, s), np, s});
  }
  return s;
}

TypeAliases profile_aliases(Profile p) {
  TypeAliases aliases = builtin_type_aliases();
  const SemType s = sentence_type(p);
  const SemType g = SemType::g();
  if (p == Profile::A) {
    aliases.insert_or_assign("cont", SemType::arrow(g, SemType::t()));
  } else {
    const SemType k = p == Profile::B ? kappa_b() : kappa_c();
    aliases.insert_or_assign("k", k);
    aliases.insert_or_assign("cont", SemType::chain({k, g, g, SemType::t()}));
  }
  aliases.insert_or_assign("s", s);
  aliases.insert_or_assign("n", category_type(Category::CommonNoun, p));
  aliases.insert_or_assign("np", category_type(Category::ProperNoun, p));
  aliases.insert_or_assign("vp", category_type(Category::IntransitiveVerb, p));
  aliases.insert_or_assign("adj", category_type(Category::Adjective, p));
  return aliases;
}

std::string normalize_word(std::string_view word) {
  std::string out;
  for (char ch : word) {
    if (ch == '\'') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return out;
}

Lexicon Lexicon::standard(Profile p) {
  Lexicon lex(p);
  auto load = [&](const auto& table) {
    for (const Shipped& s : table) {
      auto text = template_text(s.category, p);
      Term term = build(*text, s.category, p, s.content ? s.content : "");
      if (s.content) lex.signature_.declare(s.content, *content_type(s.category));
      lex.entries_.emplace(s.word, LexEntry{s.word, s.category, p, std::move(term)});
    }
  };
  switch (p) {
    case Profile::A: load(kShippedA); break;
    case Profile::B: load(kShippedB); break;
    case Profile::C: load(kShippedC); break;
  }
  return lex;
}

Lexicon Lexicon::with(LexEntry e) const {
  if (e.profile != profile_) throw ProfileMismatch("entry '" + e.word + "'", to_string(profile_));
  Lexicon out = *this;
  declare_content(e.term, out.signature_);
  const std::string word = e.word;
  out.entries_.insert_or_assign(word, std::move(e));
  return out;
}

Lexicon Lexicon::with_rejected_negation() const {
  return with(LexEntry{"doesnt", Category::NegationAux, profile_, negation_variant(true, profile_)});
}

const LexEntry* Lexicon::find(const std::string& word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

const LexEntry& Lexicon::lookup(std::string_view word) const {
  const std::string w = normalize_word(word);
  if (const LexEntry* e = find(w)) return *e;
  for (std::string_view suffix : {"es", "s"}) {
    if (w.size() > suffix.size() && w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0) {
      const LexEntry* e = find(w.substr(0, w.size() - suffix.size()));
      if (e && is_verb(e->category)) return *e;
    }
  }
  for (std::string_view suffix : {"s", "es"}) {
    const LexEntry* e = find(w + std::string(suffix));
    if (e && is_verb(e->category)) return *e;
  }
  throw UnknownWord(std::string(word), to_string(profile_));
}

bool Lexicon::contains(std::string_view word) const {
  try {
    lookup(word);
    return true;
  } catch (const UnknownWord&) {
    return false;
  }
}

std::vector<LexEntry> Lexicon::entries() const {
  std::vector<LexEntry> out;
  for (const auto& [word, e] : entries_) out.push_back(e);
  return out;
}

Term entry(std::string_view word, Profile p) { return Lexicon::standard(p).lookup(word).term; }

LexEntry make_entry(Category c, const std::string& word, Profile p) {
  if (!is_template_category(c)) throw UnsupportedCategory(to_string(c), to_string(p));
  check_word(word);
  if (builtin::is_reserved(word)) throw std::invalid_argument("'" + word + "' is reserved");
  Signature probe;
  auto type = content_type(c);
  if (type) probe.declare(word, *type);
  return LexEntry{word, c, p, build(*template_text(c, p), c, p, word)};
}

Term negation_variant(bool rejected, Profile p) {
  if (p == Profile::C) throw UnsupportedCategory(to_string(Category::NegationAux), to_string(p));
  if (!rejected) return build(*template_text(Category::NegationAux, p), Category::NegationAux, p, "");
  if (p != Profile::A) throw ProfileMismatch("rejected negation", to_string(p));
  return build(kRejectedNegationA, Category::NegationAux, p, "");
}

Lexicon extend(const Lexicon& base, std::string_view text) {
  Lexicon out = base;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string cat, word, extra;
    if (!(fields >> cat)) continue;
    if (!(fields >> word) || (fields >> extra)) {
      throw SyntaxError(number, "expected 'category word'");
    }
    Category c;
    try {
      c = parse_category(cat);
    } catch (const std::invalid_argument& e) {
      throw SyntaxError(number, e.what());
    }
    out = out.with(make_entry(c, normalize_word(word), base.profile()));
  }
  return out;
}

}  // namespace contsem
