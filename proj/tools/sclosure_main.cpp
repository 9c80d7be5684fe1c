#include "sclosure/cli.hpp"

int main(int argc, char** argv) { return sclosure::run_cli(argc, argv); }
