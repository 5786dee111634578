#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace fermat::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, bad_arguments = 2 };

struct RunConfig {
  int n = 5;
  int wN = 200;
  int xN = 32;
  std::string format = "tsv";  // tsv | json
  std::string out;             // empty: stdout
  std::string normalization = "raw";  // raw | shifted
  bool verbose = false;
};

/// Parses "key=value" lines ('#' comments, blank lines ignored) into cfg.
/// Unknown keys and malformed values throw std::invalid_argument.
void apply_config_text(const std::string& text, RunConfig& cfg);

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fermat::cli
