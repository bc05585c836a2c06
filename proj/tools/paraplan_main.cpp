#include "paraplan/cli.hpp"

int main(int argc, char** argv) { return paraplan::cli::run(argc, argv); }
