#pragma once

#include <string>
#include <vector>

namespace homlie {
namespace cli {

struct RunResult {
    int code = 0; // 0 ok, 1 verdict-negative, 2 input error, 3 internal violation
    std::string out;
};

// Full command dispatch; all output is returned, nothing is printed here.
RunResult run(const std::vector<std::string>& args);

} // namespace cli
} // namespace homlie
