#pragma once

#include <iosfwd>

namespace dgcat {

// Runs the command line tool. Exit codes: 0 success, 1 engine or input
// error (JSON report on `err`), 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dgcat
