#include "fdgb/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace fdgb {

namespace {

Rational scaled_floor(const Rational& q, unsigned bits, bool up) {
    Integer num = q.get_num();
    num <<= bits;
    Integer r;
    if (up)
        mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
    else
        mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
    Integer den = 1;
    den <<= bits;
    Rational out(r, den);
    out.canonicalize();
    return out;
}

}  // namespace

Rational round_down(const Rational& q, unsigned bits) { return scaled_floor(q, bits, false); }
Rational round_up(const Rational& q, unsigned bits) { return scaled_floor(q, bits, true); }

Rational RInterval::mag() const {
    Rational a = abs(lo);
    Rational b = abs(hi);
    return a < b ? b : a;
}

RInterval operator+(const RInterval& a, const RInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
RInterval operator-(const RInterval& a, const RInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
RInterval operator-(const RInterval& a) { return {-a.hi, -a.lo}; }

RInterval operator*(const RInterval& a, const RInterval& b) {
    if (a.lo == a.hi && b.lo == b.hi) return RInterval(a.lo * b.lo);
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RInterval operator/(const RInterval& a, const RInterval& b) {
    if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
    return a * RInterval(1 / b.hi, 1 / b.lo);
}

RInterval square(const RInterval& a) {
    Rational l2 = a.lo * a.lo;
    Rational h2 = a.hi * a.hi;
    if (a.contains_zero()) return {0, std::max(l2, h2)};
    return l2 < h2 ? RInterval(l2, h2) : RInterval(h2, l2);
}

RInterval intersect(const RInterval& a, const RInterval& b) { return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)}; }

RInterval eval(const IntPoly& p, const RInterval& x, unsigned bits) {
    RInterval acc(0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * x + RInterval(Rational(*it));
        if (bits != 0) acc = acc.rounded(bits);
    }
    return acc;
}

CBox operator+(const CBox& a, const CBox& b) { return {a.re + b.re, a.im + b.im}; }
CBox operator-(const CBox& a, const CBox& b) { return {a.re - b.re, a.im - b.im}; }

CBox operator*(const CBox& a, const CBox& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

CBox operator/(const CBox& a, const CBox& b) {
    RInterval n = b.norm2();
    if (sgn(n.lo) <= 0) throw std::domain_error("complex division by a box that may contain zero");
    CBox num = a * b.conj();
    return {num.re / n, num.im / n};
}

CBox eval(const IntPoly& p, const CBox& z, unsigned bits) {
    CBox acc{RInterval(0), RInterval(0)};
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * z;
        acc.re = acc.re + RInterval(Rational(*it));
        if (bits != 0) acc = acc.rounded(bits);
    }
    return acc;
}

}  // namespace fdgb
