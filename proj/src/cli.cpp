#include "buckyforge/cli.hpp"

#include <cstdio>

namespace buckyforge {

int run_cli(int, char**) {
  std::fputs("buckyforge: command line not wired up yet\n", stderr);
  return 1;
}

}  // namespace buckyforge
