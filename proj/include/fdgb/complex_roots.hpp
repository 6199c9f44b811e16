#pragma once

// Certified complex root isolation.

#include <vector>

#include "fdgb/int_poly.hpp"
#include "fdgb/interval.hpp"

namespace fdgb {

/// A closed square holding exactly one root of `defining` (square-free),
/// strictly inside. Real roots get boxes centred on the real axis.
struct RootBox {
    IntPoly defining;
    CBox box;
    unsigned multiplicity = 1;
    bool real = false;

    /// Upper half-plane root (the box lies strictly above the real axis).
    bool upper() const { return !real && sgn(box.im.lo) > 0; }
    /// A certified box inside this one with at most half the width.
    RootBox refined() const;
    /// Refines until the side length is at most `width`.
    RootBox refined_to(const Rational& width) const;
    Rational width() const { return box.re.width(); }
    RootBox conj() const { return {defining, box.conj(), multiplicity, real}; }
};

/// One box per distinct root; multiplicities from the square-free
/// decomposition. Boxes are pairwise disjoint and closed under conjugation.
std::vector<RootBox> isolate_complex_roots(const IntPoly& p);

/// Exclusion-and-contraction test on the square with dyadic centre
/// (cre, cim) and half-width r: true proves exactly one root of p inside,
/// lying strictly in the interior.
bool certify_square(const IntPoly& p, const Rational& cre, const Rational& cim, const Rational& r);

}  // namespace fdgb
