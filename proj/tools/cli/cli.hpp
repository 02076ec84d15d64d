#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace curvcalc::cli {

/// Parses `args` (without the program name), runs one subcommand and returns
/// the exit code: 0 on success, 2 on any usage or validation error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

struct Command {
  std::string name;
  std::string summary;
  /// Library operations the subcommand exercises.
  std::vector<std::string> operations;
};

const std::vector<Command>& dispatch_table();

}  // namespace curvcalc::cli
