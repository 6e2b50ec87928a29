#include "translin/cli.hpp"

int main(int argc, char** argv) { return translin::cli_main(argc, argv); }
