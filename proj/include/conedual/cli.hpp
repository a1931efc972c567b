#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conedual::cli {

/**
 * Runs one command. `args` excludes the program name. The result JSON goes
 * to `out` (or --output); diagnostics go to `err`.
 * Exit codes: 0 success, 1 malformed input, 2 domain error or failing suite.
 */
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}   // namespace conedual::cli
