#pragma once

namespace buckyforge {

// Command-line entry point (see README / --help for flags). Returns the
// process exit code: 0 on success, 1 on any error.
int run_cli(int argc, char** argv);

}  // namespace buckyforge
