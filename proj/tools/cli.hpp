#pragma once

#include <iosfwd>

namespace swforge::cli {

/// Runs one subcommand. Exit codes: 0 success (including "not found" and
/// "unresolved" answers), 1 domain or I/O error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace swforge::cli
