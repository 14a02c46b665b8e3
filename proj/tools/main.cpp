#include "l2b/cli.hpp"

int main(int argc, char** argv) { return l2b::run_cli(argc, argv); }
