#pragma once

#include <stdexcept>
#include <string>

namespace fairopt {

// Instance is too large for an exact subroutine (enumeration, subset DP).
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed instance file; line is 1-based.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line_no)
        : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
    int line;
};

}  // namespace fairopt
