#include "hopspec/cli.hpp"

int main(int argc, char** argv) { return hopspec::run_cli(argc, argv); }
