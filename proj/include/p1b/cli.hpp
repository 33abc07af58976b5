#pragma once

#include <iosfwd>

namespace p1b::cli {

// Parse argv, dispatch the subcommand, and write results to `out` and
// diagnostics to `err`. Returns 0 on success, 2 on input validation
// errors (bad flags, descriptors out of range, malformed polynomials),
// 1 on internal errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace p1b::cli
