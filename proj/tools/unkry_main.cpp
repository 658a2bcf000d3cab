#include "unkry/cli.hpp"

int main(int argc, char** argv) { return unkry::cli::run_cli(argc, argv); }
