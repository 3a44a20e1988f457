#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gradex::cli {

/// Exit codes: 0 success, 1 unknown subcommand or internal failure,
/// 2 invalid input, 3 size guard refusal.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gradex::cli
