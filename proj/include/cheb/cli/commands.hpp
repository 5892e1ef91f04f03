#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cheb::cli {

struct CommandInfo {
  std::string name;
  std::string summary;
  /// Library operations the subcommand can invoke.
  std::vector<std::string> operations;
};

const std::vector<CommandInfo>& command_table();

/// Runs one subcommand. args excludes the program name. Returns 0 on success,
/// 2 on a usage or domain error, 3 when the memory budget would be exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cheb::cli
