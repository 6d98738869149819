#pragma once

namespace vortexlab::cli {

// Builds the full command tree, parses, dispatches, and maps errors to the
// exit-code contract: 0 success, 1 verification failure, 2 usage or config
// error.
int run_cli(int argc, const char* const* argv);

}  // namespace vortexlab::cli
