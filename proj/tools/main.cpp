#include "bicentric/cli.hpp"

int main(int argc, char** argv) { return bicentric::cli_main(argc, argv); }
