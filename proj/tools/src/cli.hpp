#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grcyc::app {

/// Parses argv (without the program name) and runs one subcommand.
/// Returns 0 on success, 1 on a failed check, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grcyc::app
