#pragma once

#include <ostream>

namespace nmaw::cli {

// Parses argv and dispatches to one subcommand. Returns the process exit
// code: 0 success, 1 usage/input error, 2 verification failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nmaw::cli
