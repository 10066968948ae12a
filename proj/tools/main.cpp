#include "cli.hpp"

int main(int argc, char** argv) { return minorsat::cli::run(argc, argv); }
