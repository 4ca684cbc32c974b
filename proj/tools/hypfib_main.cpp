#include "cli/commands.hpp"

int main(int argc, char** argv) { return hypfib::cli::run_cli(argc, argv); }
