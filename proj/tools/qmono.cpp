#include "qmono/cli_core.hpp"

int main(int argc, char** argv) { return qmono::cli::run_cli(argc, argv); }
