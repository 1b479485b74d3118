#include <cstdio>

#include "homlie/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    homlie::cli::RunResult res = homlie::cli::run(args);
    std::fputs(res.out.c_str(), stdout);
    return res.code;
}
