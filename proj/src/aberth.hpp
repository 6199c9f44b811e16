#pragma once

// Floating-point root approximation (MPFR), used only to seed certified boxes.

#include <vector>

#include "fdgb/int_poly.hpp"

namespace fdgb::detail {

struct ApproxRoot {
    Rational re;
    Rational im;
};

/// Simultaneous Aberth-Ehrlich iteration at `prec` bits on a square-free p.
/// `start`, when non-empty, must hold deg(p) previous approximations.
std::vector<ApproxRoot> aberth(const IntPoly& p, unsigned prec, const std::vector<ApproxRoot>& start);

}  // namespace fdgb::detail
