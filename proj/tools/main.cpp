#include "cli.hpp"

int main(int argc, char** argv) { return ifsx::cli::run(argc, argv); }
