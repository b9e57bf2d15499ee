#include "sfn/cli.hpp"

int main(int argc, char** argv) { return sfn::cli::run(argc, argv); }
