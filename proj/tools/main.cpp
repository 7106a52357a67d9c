#include "latpoly/cli.hpp"

int main(int argc, char** argv) { return latpoly::cli::run(argc, argv); }
