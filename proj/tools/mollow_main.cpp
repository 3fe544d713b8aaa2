#include "mollow/cli.hpp"

int main(int argc, char** argv) { return mollow::cli::run_main(argc, argv); }
