#include "islands/cli.hpp"

int main(int argc, char** argv) { return islands::cli::run(argc, argv); }
