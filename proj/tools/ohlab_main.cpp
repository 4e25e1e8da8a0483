#include "ohlab/cli.hpp"

int main(int argc, char** argv) { return ohlab::cli_main(argc, argv); }
