#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace idlat::cli {

// Runs one command line (without the program name). Exit codes: 0 all
// checks pass, 1 a check failed, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace idlat::cli
