#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pricing {

// Dispatches one command line (without the program name). Returns the
// process exit status: 0 success / decision "yes", 1 decision "no" or failed
// verification, 2 usage or runtime error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pricing
