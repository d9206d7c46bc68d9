#include "buckyforge/cli.hpp"

int main(int argc, char** argv) { return buckyforge::run_cli(argc, argv); }
