#include "lsgq/cli.hpp"

int main(int argc, char** argv) { return lsgq::run_cli(argc, argv); }
