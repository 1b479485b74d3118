#pragma once

#include <stdexcept>
#include <string>

namespace homlie {

// User-facing input problems (bad files, bad flags): CLI exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated operation preconditions (dimension mismatch, mixed fields,
// unsupported arity, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A matrix that was required to be invertible is not; carries the rank.
struct singular_matrix_error : domain_error {
    int rank;
    singular_matrix_error(const std::string& msg, int rank_)
        : domain_error(msg + " (rank " + std::to_string(rank_) + ")"), rank(rank_) {}
};

// A "cannot happen" condition: a construction emitted an object failing its
// own postcondition. CLI exit code 3.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace homlie
