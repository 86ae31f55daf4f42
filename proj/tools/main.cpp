#include "deformlab/cli.hpp"

int main(int argc, char** argv) { return deformlab::run_cli(argc, argv); }
