#include "hyperjet/cli.hpp"

int main(int argc, char** argv) { return hyperjet::run_cli(argc, argv); }
