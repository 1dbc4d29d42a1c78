// Thin executable wrapper around the CLI library entry point.
#include "grazecont/cli.hpp"

int main(int argc, char** argv) { return grazecont::cli::run(argc, argv); }
