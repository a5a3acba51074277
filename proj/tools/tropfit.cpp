#include "tropfit/cli.hpp"

int main(int argc, char** argv) { return tropfit::cli::main(argc, argv); }
