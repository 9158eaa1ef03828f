#include <lmweyl/cli.hpp>

int main(int argc, char** argv) { return lmweyl::cli::run(argc, argv); }
