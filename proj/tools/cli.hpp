#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tfc::cli {

// Exit codes shared by every subcommand.
enum Exit : int { ok = 0, failed = 1, bad_input = 2, missing_data = 3 };

// args excludes the program name. Everything the command prints goes to
// out; diagnostics and warnings go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tfc::cli
