#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace superlie::cli {

/// Runs one invocation. `args` excludes the program name.
/// Returns 0 when every requested check passes, 1 on a failed check and 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superlie::cli
