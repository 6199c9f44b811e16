#pragma once

// Real root isolation and real algebraic numbers.

#include <optional>
#include <vector>

#include "fdgb/int_poly.hpp"
#include "fdgb/interval.hpp"

namespace fdgb {

/// Real root of a square-free primitive polynomial, isolated by [lo, hi].
/// Either lo == hi (a rational root) or the defining polynomial is nonzero at
/// both endpoints and has exactly one root strictly inside.
struct RealAlgebraic {
    IntPoly defining;
    Rational lo;
    Rational hi;

    static RealAlgebraic rational(const Rational& r);

    bool is_rational() const { return lo == hi; }
    RInterval interval() const { return {lo, hi}; }
    /// One bisection step.
    RealAlgebraic refined() const;
    /// Bisects until hi - lo <= width.
    RealAlgebraic refined_to(const Rational& width) const;
};

struct RealRoot {
    RealAlgebraic value;
    unsigned multiplicity;
};

/// Upper bound on the number of roots of p in the open interval (a, b)
/// (Descartes' rule after a Moebius transform). 0 and 1 are exact.
unsigned descartes_bound(const IntPoly& p, const Rational& a, const Rational& b);

/// Distinct real roots in increasing order with pairwise disjoint intervals.
std::vector<RealRoot> isolate_real_roots(const IntPoly& p);
/// Roots in (0, inf) counted with multiplicity.
unsigned count_positive_roots(const IntPoly& p);

/// Builds a RealAlgebraic for the unique root of the square-free q in (lo, hi)
/// when that uniqueness can be certified directly; nothing otherwise.
std::optional<RealAlgebraic> isolate_in(const IntPoly& q, const Rational& lo, const Rational& hi);

int sign_at(const IntPoly& p, const RealAlgebraic& a);
/// -1, 0, +1 as a <, =, > b.
int compare(const RealAlgebraic& a, const RealAlgebraic& b);
int compare(const RealAlgebraic& a, const Rational& b);
/// a^k for a >= 0.
RealAlgebraic power(const RealAlgebraic& a, unsigned k);

/// Bisection cap shared by all refinement loops.
inline constexpr int kRefineCap = 10000;

}  // namespace fdgb
