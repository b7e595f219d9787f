#include <subpow/cli.hpp>

int main(int argc, char** argv) { return subpow::cli::run(argc, argv); }
