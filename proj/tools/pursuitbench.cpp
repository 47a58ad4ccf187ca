#include "pe/bench.hpp"

int main(int argc, char** argv) { return pe::cli_main(argc, argv); }
