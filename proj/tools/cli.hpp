#pragma once

#include <iosfwd>

namespace qtorus::cli {

/// Exit codes: 0 success / all checks passed, 1 a check failed or an
/// internal consistency check tripped, 2 invalid flags or parameters.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qtorus::cli
