// Command-line frontend.  Every pipeline is reachable through a
// subcommand with machine-readable JSON or CSV output; `verify` runs the
// cross-route suites.  Exit codes: 0 success, 2 usage, 3 capacity,
// 4 verification failure.
#pragma once

namespace hyperjet {

int run_cli(int argc, const char* const* argv);

}  // namespace hyperjet
