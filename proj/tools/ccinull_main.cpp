#include <ccinull/cli.hpp>

int main(int argc, char** argv) { return ccinull::run_cli(argc, argv); }
