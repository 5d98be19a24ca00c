#include "rkdv/cli.hpp"

int main(int argc, char** argv) { return rkdv::cli::main_impl(argc, argv); }
