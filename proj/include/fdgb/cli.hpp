#pragma once

// Command-line front end: polynomial parsing and subcommand dispatch.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdgb/int_poly.hpp"

namespace fdgb {

struct ParseError : std::invalid_argument {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
};

inline constexpr unsigned long kMaxExponent = 1000000;

/// Integers, x, ^ with nonnegative integer exponents, + - *, parentheses.
IntPoly parse_poly(const std::string& text);

/// Canonical text without spaces, e.g. "x^2-2*x+2".
std::string compact(const IntPoly& p);

/// Runs the command line (args excludes the program name). Exit codes:
/// 0 decided, 2 conjectural or unknown, 1 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fdgb
