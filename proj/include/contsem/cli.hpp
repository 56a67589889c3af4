#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "contsem/lexicon.hpp"
#include "contsem/normalize.hpp"
#include "contsem/resolver.hpp"

namespace contsem {

struct RunConfig {
  enum class Mode { Interpret, SymbolicExpand, TermEval };
  enum class Format { Text, Json };

  std::string input;
  std::optional<Profile> profile;  // overrides the file's `profile` line
  /// Unset: TermEval for a `term =` file, SymbolicExpand when the file or
  /// `symbolic` asks for it, Interpret otherwise.
  std::optional<Mode> mode;
  bool symbolic = false;
  ResolveStrategy resolve = ResolveStrategy::Symbolic;
  bool show_raw = true;
  bool trace = false;
  std::size_t max_steps = kDefaultMaxSteps;
  Format format = Format::Text;
  std::optional<std::string> lexicon_file;
  bool rejected_negation = false;
  std::optional<std::string> init;  // overrides the file's `init` line
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitPipeline = 1;
inline constexpr int kExitUsage = 2;

/// Runs one discourse file. Results go to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 on a pipeline error, 2 on a usage error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// `contsem run <file> [options]`; parses arguments and calls run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace contsem
