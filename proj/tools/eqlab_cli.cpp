#include "eqlab/harness/cli.hpp"

int main(int argc, char** argv) { return eqlab::harness::run_cli(argc, argv); }
