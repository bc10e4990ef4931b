#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace apxconv {

/// Entry point of the apxconv tool, factored out of main() so tests can
/// drive it in process. `args` excludes the program name.
///
/// Exit codes: 0 success / all checks passed; 1 a check failed or an axiom
/// violation was found; 2 usage, parse or unsupported-input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace apxconv
