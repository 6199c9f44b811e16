#pragma once

// Searching for and bounding the monic cofactor g with f g in Phi0.

#include <optional>
#include <vector>

#include "fdgb/int_poly.hpp"

namespace fdgb {

/// (m+n) x (m+1) band matrix A of f: A (1, b_{m-1}, ..., b_0)^T <= 0 iff
/// f (x^m + b_{m-1} x^{m-1} + ... + b_0) is in Phi0.
struct Phi0System {
    std::vector<std::vector<Integer>> matrix;
    unsigned m = 0;

    bool satisfied_by(const std::vector<Integer>& b) const;
};

Phi0System build_phi0_system(const IntPoly& f, unsigned m);

/// Exact rational feasibility by Fourier-Motzkin elimination.
bool feasible_rational(const Phi0System& s);

struct IntegerPoint {
    std::optional<std::vector<Integer>> b;  // b_{m-1}, ..., b_0
    bool capped = false;                    // node cap reached without a verdict
};

/// Depth-first search over integer points guided by the elimination bounds.
IntegerPoint find_integer_point(const Phi0System& s, unsigned long node_cap);

inline constexpr unsigned long kDefaultNodeCap = 100000;

struct Witness {
    IntPoly g;
    unsigned m_min = 0;
    /// Degrees below m_min whose integer search hit the node cap.
    std::vector<unsigned> open_degrees;
};

std::optional<Witness> find_witness(const IntPoly& f, unsigned m_max, unsigned long node_cap = kDefaultNodeCap);

struct SeriesBound {
    unsigned bound = 0;
    /// False when no negative coefficient appeared within the horizon.
    bool conclusive = true;
};

/// Least j with lambda_j < 0 in 1/f = sum lambda_j x^j; horizon 0 means 4 deg(f)^2.
SeriesBound series_lower_bound(const IntPoly& f, unsigned horizon = 0);

struct DeltaTrace {
    std::vector<Rational> values;  // Delta_1, Delta_2, ...
    std::size_t terminal = 0;      // first index (1-based) with Delta >= 0
};

/// Requires a quadratic with negative discriminant and a1 < 0.
DeltaTrace delta_trace(const IntPoly& f);
unsigned quadratic_min_degree(const IntPoly& f);

/// max over non-real roots z of floor(pi / |Arg z|) - deg f + 2, floored at 0.
unsigned complex_lower_bound(const IntPoly& f);

}  // namespace fdgb
