#pragma once

// Exact rational interval and rectangle arithmetic.

#include "fdgb/int_poly.hpp"

namespace fdgb {

/// Rounds q down (up) to a multiple of 2^-bits.
Rational round_down(const Rational& q, unsigned bits);
Rational round_up(const Rational& q, unsigned bits);

struct RInterval {
    Rational lo;
    Rational hi;

    RInterval() = default;
    RInterval(Rational v) : lo(v), hi(std::move(v)) {}
    RInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool subset_of_interior(const RInterval& o) const { return o.lo < lo && hi < o.hi; }
    bool subset_of(const RInterval& o) const { return o.lo <= lo && hi <= o.hi; }
    bool disjoint(const RInterval& o) const { return hi < o.lo || o.hi < lo; }
    /// max(|lo|, |hi|)
    Rational mag() const;
    /// Widens outward to dyadic endpoints with the given number of fractional bits.
    RInterval rounded(unsigned bits) const { return {round_down(lo, bits), round_up(hi, bits)}; }
};

RInterval operator+(const RInterval& a, const RInterval& b);
RInterval operator-(const RInterval& a, const RInterval& b);
RInterval operator-(const RInterval& a);
RInterval operator*(const RInterval& a, const RInterval& b);
/// Division; throws if b contains zero.
RInterval operator/(const RInterval& a, const RInterval& b);
RInterval square(const RInterval& a);
RInterval intersect(const RInterval& a, const RInterval& b);

/// Enclosure of p over an interval (Horner form). A nonzero bits value rounds
/// every intermediate outward to that many fractional bits.
RInterval eval(const IntPoly& p, const RInterval& x, unsigned bits = 0);

/// Axis-parallel rectangle re x im in the complex plane.
struct CBox {
    RInterval re;
    RInterval im;

    bool subset_of_interior(const CBox& o) const {
        return re.subset_of_interior(o.re) && im.subset_of_interior(o.im);
    }
    bool subset_of(const CBox& o) const { return re.subset_of(o.re) && im.subset_of(o.im); }
    bool disjoint(const CBox& o) const { return re.disjoint(o.re) || im.disjoint(o.im); }
    CBox conj() const { return {re, -im}; }
    /// Range of |z|^2 over the box.
    RInterval norm2() const { return square(re) + square(im); }
    CBox rounded(unsigned bits) const { return {re.rounded(bits), im.rounded(bits)}; }
};

CBox operator+(const CBox& a, const CBox& b);
CBox operator-(const CBox& a, const CBox& b);
CBox operator*(const CBox& a, const CBox& b);
/// Complex division a / b; throws if b may contain zero.
CBox operator/(const CBox& a, const CBox& b);

CBox eval(const IntPoly& p, const CBox& z, unsigned bits = 0);

}  // namespace fdgb
