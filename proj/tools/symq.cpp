#include <cstdio>
#include <string>
#include <vector>

#include "symq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    symq::CliResult result = symq::run_cli(args);
    if (!result.out.empty()) std::fputs(result.out.c_str(), stdout);
    if (!result.err.empty()) std::fputs(result.err.c_str(), stderr);
    return result.exit_code;
}
