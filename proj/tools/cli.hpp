#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsing::cli {

// Runs the command line given by args (without the program name), writing
// results to `out` and problems to `err`. Returns 0 on success / a verified
// claim, 1 when a well-formed question gets a negative verdict, 2 on usage
// or input errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace qsing::cli
