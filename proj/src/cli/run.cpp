#include "contsem/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "contsem/discourse.hpp"
#include "contsem/dsl.hpp"
#include "contsem/errors.hpp"
#include "contsem/formula_syntax.hpp"
#include "contsem/logic.hpp"
#include "contsem/term_syntax.hpp"
#include "json.hpp"

namespace contsem {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Everything a run computes; absent parts are not printed.
struct Output {
  std::string profile;
  std::string mode;
  Term composed;
  Term normal;
  std::vector<TraceStep> steps;
  bool traced = false;
  std::optional<Formula> raw;
  std::optional<Formula> simplified;
  std::vector<AccessReport> reports;
  std::optional<Formula> resolved;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string mode_name(RunConfig::Mode m) {
  switch (m) {
    case RunConfig::Mode::Interpret: return "interpret";
    case RunConfig::Mode::SymbolicExpand: return "symbolic-expand";
    case RunConfig::Mode::TermEval: return "term-eval";
  }
  return "?";
}

void read_formulas(Output& o, const Formula& raw, const RunConfig& config) {
  if (config.show_raw) o.raw = raw;
  o.simplified = simplify(raw);
  o.reports = report(*o.simplified);
  if (config.resolve == ResolveStrategy::Recency) o.resolved = resolve(*o.simplified, config.resolve);
}

Output compute(const RunConfig& config) {
  const std::string text = read_file(config.input);
  DslDocument doc = parse_document(text);

  const Profile profile = config.profile ? *config.profile : doc.profile ? doc.profile->value : Profile::B;
  Lexicon lexicon = document_lexicon(doc, profile, config.rejected_negation);
  if (config.lexicon_file) lexicon = extend(lexicon, read_file(*config.lexicon_file));

  RunConfig::Mode mode = RunConfig::Mode::Interpret;
  if (config.mode) {
    mode = *config.mode;
  } else if (doc.term) {
    mode = RunConfig::Mode::TermEval;
  } else if (config.symbolic || doc.symbolic) {
    mode = RunConfig::Mode::SymbolicExpand;
  }
  if (mode == RunConfig::Mode::SymbolicExpand && profile != Profile::C) {
    throw UsageError("symbolic expansion requires profile C");
  }
  if (mode == RunConfig::Mode::TermEval && !doc.term) throw UsageError("the file has no 'term =' line");
  if (mode != RunConfig::Mode::TermEval && !doc.discourse) throw UsageError("the file has no 'discourse =' line");

  Output o{to_string(profile), mode_name(mode), builtin::top(), builtin::top(), {}, config.trace, {}, {}, {}, {}};
  auto run_trace = [&](const Term& t) {
    if (config.trace) o.steps = trace(t, config.max_steps);
  };

  if (mode == RunConfig::Mode::TermEval) {
    Signature sig = document_signature(doc, lexicon);
    try {
      o.composed = parse_term(doc.term->value, sig, profile_aliases(profile));
    } catch (const Error& e) {
      throw SourceError(doc.term->line, e.what());
    }
    SemType type = typecheck(o.composed);
    run_trace(o.composed);
    o.normal = normalize(o.composed, config.max_steps);
    if (type == SemType::t()) read_formulas(o, reify(o.normal), config);
    return o;
  }

  DiscourseTree tree = document_tree(doc, lexicon, mode == RunConfig::Mode::SymbolicExpand || config.symbolic);
  o.composed = compose(tree, lexicon);
  run_trace(o.composed);
  o.normal = normalize(o.composed, config.max_steps);
  if (mode == RunConfig::Mode::SymbolicExpand) return o;

  if (tree.symbolic()) throw Error("undefined sentences are only allowed in symbolic mode");
  InitialArgs init = InitialArgs::defaults(profile);
  const Signature sig = document_signature(doc, lexicon);
  if (config.init) {
    init = InitialArgs::parse(*config.init, profile, sig);
  } else if (doc.init) {
    try {
      init = InitialArgs::parse(doc.init->value, profile, sig);
    } catch (const Error& e) {
      throw SourceError(doc.init->line, e.what());
    }
  }
  Term applied = normalize(Term::apply(o.normal, init.args), config.max_steps);
  read_formulas(o, reify(applied), config);
  return o;
}

void print_text(const Output& o, std::ostream& out) {
  out << "composed term: " << pretty(o.composed) << "\n";
  if (o.traced) {
    out << "trace:" << (o.steps.empty() ? " none" : "") << "\n";
    for (const auto& s : o.steps) {
      out << "  " << s.index << " @" << (s.position.empty() ? "root" : s.position) << " " << pretty(s.result) << "\n";
    }
  }
  out << "normal form: " << pretty(o.normal) << "\n";
  if (o.raw) out << "raw formula: " << to_text(*o.raw) << "\n";
  if (!o.simplified) return;
  out << "simplified formula: " << to_text(*o.simplified) << "\n";
  out << "access report:" << (o.reports.empty() ? " none" : "") << "\n";
  for (const auto& r : o.reports) out << "  " << render(r) << "\n";
  if (o.resolved) out << "resolved formula: " << to_text(*o.resolved) << "\n";
}

json formula_json(const std::optional<Formula>& f) {
  if (!f) return nullptr;
  return {{"text", to_text(*f)}, {"tree", to_json(*f)}};
}

void print_json(const Output& o, std::ostream& out) {
  json doc;
  doc["profile"] = o.profile;
  doc["mode"] = o.mode;
  doc["composed_term"] = pretty(o.composed);
  doc["normal_form"] = pretty(o.normal);
  if (o.traced) {
    json steps = json::array();
    for (const auto& s : o.steps) {
      steps.push_back({{"index", s.index}, {"position", s.position}, {"term", pretty(s.result)}});
    }
    doc["trace"] = std::move(steps);
  }
  doc["raw_formula"] = formula_json(o.raw);
  doc["simplified_formula"] = formula_json(o.simplified);
  json reports = json::array();
  for (const auto& r : o.reports) {
    json candidates = json::array();
    for (const auto& c : r.candidates) candidates.push_back(to_text(c));
    reports.push_back({{"site", r.site_id},
                       {"env", to_text(r.env)},
                       {"candidates", std::move(candidates)},
                       {"line", render(r)}});
  }
  doc["access_reports"] = o.simplified ? std::move(reports) : json(nullptr);
  doc["resolved_formula"] = formula_json(o.resolved);
  out << doc.dump(2) << "\n";
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Output o = compute(config);
    if (config.format == RunConfig::Format::Json) {
      print_json(o, out);
    } else {
      print_text(o, out);
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "contsem: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << config.input << ": " << e.what() << "\n";
    return kExitPipeline;
  } catch (const std::invalid_argument& e) {
    err << config.input << ": " << e.what() << "\n";
    return kExitPipeline;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuation-based discourse semantics: compose, normalize and inspect discourses.", "contsem"};
  app.require_subcommand(1);
  CLI::App* cmd = app.add_subcommand("run", "interpret a discourse file");

  RunConfig config;
  std::string profile, resolve = "symbolic", format = "text";
  std::size_t max_steps = kDefaultMaxSteps;
  std::string lexicon_file, init;
  cmd->add_option("file", config.input, "discourse file")->required();
  cmd->add_option("--profile", profile, "override the file's profile")->check(CLI::IsMember({"A", "B", "C"}));
  cmd->add_flag("--symbolic", config.symbolic, "treat undefined sentence ids as symbolic units and expand");
  cmd->add_option("--resolve", resolve, "referent choice at sel sites")
      ->check(CLI::IsMember({"symbolic", "recency"}));
  cmd->add_flag("--raw,!--no-raw", config.show_raw, "print the formula before simplification (default on)");
  cmd->add_flag("--trace", config.trace, "print the normal-order reduction sequence");
  cmd->add_option("--max-steps", max_steps, "reduction step budget")->check(CLI::PositiveNumber);
  cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--lexicon", lexicon_file, "extra entries, one 'category word' per line");
  cmd->add_flag("--rejected-negation", config.rejected_negation,
                "use the negation entry that keeps the continuation under the negation (profile A)");
  cmd->add_option("--init", init, "initial arguments, 't1 ; t2 ; ...'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << (cmd->parsed() ? cmd->help() : app.help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "contsem: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (!profile.empty()) config.profile = parse_profile(profile);
  config.resolve = resolve == "recency" ? ResolveStrategy::Recency : ResolveStrategy::Symbolic;
  config.format = format == "json" ? RunConfig::Format::Json : RunConfig::Format::Text;
  config.max_steps = max_steps;
  if (!lexicon_file.empty()) config.lexicon_file = lexicon_file;
  if (!init.empty()) config.init = init;

  std::ifstream probe(config.input);
  if (!probe) {
    err << "contsem: cannot open '" << config.input << "'\n" << cmd->help();
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace contsem
