#include "fracpde/cli.hpp"

int main(int argc, char** argv) { return fracpde::cli::run_main(argc, argv); }
