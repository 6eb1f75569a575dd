// app.hpp: argument parsing and dispatch for the tidisc executable

#pragma once

#include <iosfwd>

namespace tidisc::cli {

/// Exit codes: 0 success, 1 a validation suite failed, 2 invalid input, 3 numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tidisc::cli
