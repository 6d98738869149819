#include "commands.hpp"

int main(int argc, char** argv) { return vortexlab::cli::run_cli(argc, argv); }
