#pragma once

#include <iosfwd>

namespace hsz {

/// Exit codes: 0 PASS / success, 1 FAIL, 2 invalid input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hsz
