#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orebc {

/// Runs one `orebc` invocation; `args` excludes the program name.
/// Returns 0 on success, 1 on domain errors (error name on `err`), 2 on syntax or usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orebc
