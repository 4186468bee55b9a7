#include "shellconf/cli.hpp"

int main(int argc, char** argv) { return shellconf::cli::main_entry(argc, argv); }
