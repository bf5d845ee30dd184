#include "twoarm/cli.hpp"

int main(int argc, char** argv) { return twoarm::cli_main(argc, argv); }
