#include "rr1/cli.hpp"

int main(int argc, char** argv) { return rr1::run_cli(argc, argv); }
