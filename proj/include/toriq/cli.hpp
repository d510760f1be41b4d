#pragma once

#include <ostream>

namespace toriq {

// Command line entry point.  Exit status: 0 success, 1 domain error or a
// failed check, 2 usage error (bad arguments, unreadable or malformed input).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toriq
