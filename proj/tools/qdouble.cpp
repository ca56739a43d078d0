#include "qdouble/cli.hpp"

int main(int argc, char** argv) { return qdouble::cli::run(argc, argv); }
