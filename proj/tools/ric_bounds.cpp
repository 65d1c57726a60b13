#include "cli.hpp"

int main(int argc, char** argv) { return ricbounds::cli::cli_main(argc, argv); }
