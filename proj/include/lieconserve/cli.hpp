#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace lieconserve::cli {

enum ExitCode : int {
  kPass = 0,
  kUsage = 1,
  kFail = 2,
  kInconclusive = 3,
};

/// Runs `lieconserve <subcommand> ...`; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// `key = value` lines. Blank lines and lines starting with '#' are
/// skipped. Throws std::invalid_argument on a line without '='.
std::vector<std::pair<std::string, std::string>> read_config(std::istream& in);

/// Appends the entries of the --config file whose keys are not already given
/// as flags. Throws std::invalid_argument if the file cannot be read.
std::vector<std::string> merge_config(const std::vector<std::string>& args);

}  // namespace lieconserve::cli
