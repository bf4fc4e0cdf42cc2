#include "polydiag/cli.hpp"

int main(int argc, char** argv) { return polydiag::cli::run_cli(argc, argv); }
