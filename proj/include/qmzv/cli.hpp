#pragma once

#include <iosfwd>

namespace qmzv {

// Runs the command line front end. Data goes to out, diagnostics and progress
// to err. Returns 0 on success, 1 when a verification fails, 2 on usage or
// input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qmzv
