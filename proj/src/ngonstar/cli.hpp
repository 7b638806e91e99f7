#pragma once

// Command-line front end.  Kept separate from main() so the full argv ->
// output -> exit-code path can be exercised in-process by the tests.
//
// Exit codes: 0 on success, 1 when a verification run reports a failing
// check, 2 on usage or domain errors.

#include <ostream>

namespace ngonstar {

[[nodiscard]] int run_cli(int argc, const char* const* argv, std::ostream& out,
                          std::ostream& err);

}  // namespace ngonstar
