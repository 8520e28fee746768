#include <icg/cli.hpp>

int main(int argc, char** argv) { return icg::cli::run(argc, argv); }
