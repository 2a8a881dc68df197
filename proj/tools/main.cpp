#include "cli.hpp"

int main(int argc, char** argv) { return gbcodes::cli::run(argc, argv); }
