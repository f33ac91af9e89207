#include "pgk/cli.hpp"

int main(int argc, char** argv) { return pgk::run_cli(argc, argv); }
