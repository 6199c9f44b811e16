#pragma once

// Roots relative to the circle |z| = x+ through the positive root.

#include <optional>
#include <vector>

#include "fdgb/complex_roots.hpp"
#include "fdgb/real_roots.hpp"

namespace fdgb {

/// True iff some root z of f has |z| > x_plus. x_plus must be a positive root of f.
bool has_root_outside(const IntPoly& f, const RealAlgebraic& x_plus);

struct CircleRoots {
    bool has_minus_xplus = false;
    /// One box per upper half-plane root on the circle, with multiplicity.
    std::vector<RootBox> complex_pairs;
};

/// Requires that has_root_outside(f, x_plus) is false.
CircleRoots roots_on_circle(const IntPoly& f, const RealAlgebraic& x_plus);

/// Box of num/den as a root of the square-free part of resultant_ratio(den, num).
RootBox quotient_root(const RootBox& num, const RealAlgebraic& den);
RootBox quotient_root(const RootBox& num, const RootBox& den);

/// Least m with w^m = 1 for the root isolated by `w`, if w is a root of unity.
std::optional<unsigned> unity_order(const RootBox& w);

/// Least m with (z / x_plus)^m = 1, if any. max_deg bounds the degree of the
/// ratio polynomial that may be built.
std::optional<unsigned> ratio_order(const IntPoly& f, const RootBox& z, const RealAlgebraic& x_plus, unsigned max_deg);

}  // namespace fdgb
