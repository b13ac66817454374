#include "oscillab/cli/run.hpp"

int main(int argc, char** argv) { return oscillab::cli::run(argc, argv); }
