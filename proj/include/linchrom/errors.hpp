#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linchrom {

// Bad argument values (probabilities out of range, length mismatches, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The exact solvers refuse inputs beyond their configured caps instead of
// silently running for hours.
struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented precondition was violated by the caller.
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input; offset is the byte position of the problem.
struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace linchrom
