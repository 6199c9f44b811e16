#include "fdgb/real_roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace fdgb {

namespace {

unsigned sign_variations(const IntPoly& p) {
    unsigned v = 0;
    int last = 0;
    for (const auto& c : p.coeffs()) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// Cauchy bound rounded up to a power of two: every root has |z| < 2^k.
Rational root_bound(const IntPoly& p) {
    std::size_t top = 0;
    for (const auto& c : p.coeffs()) top = std::max(top, mpz_sizeinbase(c.get_mpz_t(), 2));
    std::size_t lead = mpz_sizeinbase(p.lc().get_mpz_t(), 2);
    std::size_t k = top >= lead ? top - lead + 2 : 1;
    Integer b = 1;
    b <<= k;
    return Rational(b);
}

void isolate_positive(const IntPoly& p, const Rational& a, const Rational& b, std::vector<RealAlgebraic>& out, int depth) {
    if (depth > kRefineCap) throw std::logic_error("real root isolation exceeded the bisection cap");
    unsigned v = descartes_bound(p, a, b);
    if (v == 0) return;
    if (v == 1 && sign_at(p, a) != 0 && sign_at(p, b) != 0) {
        out.push_back({p, a, b});
        return;
    }
    Rational m = (a + b) / 2;
    isolate_positive(p, a, m, out, depth + 1);
    if (sign_at(p, m) == 0) out.push_back(RealAlgebraic::rational(m));
    isolate_positive(p, m, b, out, depth + 1);
}

// Isolates the roots of a square-free polynomial.
std::vector<RealAlgebraic> isolate_squarefree(const IntPoly& p) {
    std::vector<RealAlgebraic> out;
    IntPoly q = p;
    if (sgn(q.trailing_constant()) == 0) {
        out.push_back(RealAlgebraic::rational(0));
        q = shift_down(q, 1);
    }
    if (q.degree() <= 0) return out;
    q = q.primitive();
    const Rational bound = root_bound(q);
    std::vector<RealAlgebraic> neg;
    isolate_positive(reflect(q), 0, bound, neg, 0);
    for (auto& r : neg) {
        if (r.is_rational())
            out.push_back(RealAlgebraic::rational(-r.lo));
        else
            out.push_back({q, -r.hi, -r.lo});
    }
    std::vector<RealAlgebraic> pos;
    isolate_positive(q, 0, bound, pos, 0);
    for (auto& r : pos) {
        if (r.is_rational())
            out.push_back(r);
        else
            out.push_back({q, r.lo, r.hi});
    }
    return out;
}

bool sign_change(const IntPoly& g, const Rational& lo, const Rational& hi) {
    return sign_at(g, lo) * sign_at(g, hi) < 0;
}

}  // namespace

RealAlgebraic RealAlgebraic::rational(const Rational& r) {
    IntPoly def(std::vector<Integer>{-r.get_num(), r.get_den()});
    return {def, r, r};
}

RealAlgebraic RealAlgebraic::refined() const {
    if (is_rational()) return *this;
    Rational m = (lo + hi) / 2;
    int sm = fdgb::sign_at(defining, m);
    if (sm == 0) return rational(m);
    if (fdgb::sign_at(defining, lo) * sm < 0) return {defining, lo, m};
    return {defining, m, hi};
}

RealAlgebraic RealAlgebraic::refined_to(const Rational& width) const {
    RealAlgebraic a = *this;
    for (int i = 0; a.hi - a.lo > width; ++i) {
        if (i > kRefineCap) throw std::logic_error("refinement cap exhausted");
        a = a.refined();
    }
    return a;
}

unsigned descartes_bound(const IntPoly& p, const Rational& a, const Rational& b) {
    if (p.degree() <= 0) return 0;
    const Rational w = b - a;
    Integer d;
    mpz_lcm(d.get_mpz_t(), a.get_den_mpz_t(), w.get_den_mpz_t());
    const Integer an = a.get_num() * (d / a.get_den());
    const Integer wn = w.get_num() * (d / w.get_den());
    const IntPoly lin(std::vector<Integer>{an, wn});
    const auto n = static_cast<std::size_t>(p.degree());
    IntPoly acc = IntPoly::constant(p.lc());
    Integer dpow = 1;
    for (std::size_t i = n; i-- > 0;) {
        dpow *= d;
        acc = acc * lin + IntPoly::constant(p.coeffs()[i] * dpow);
    }
    // acc(x) = d^n p(a + w x); roots in (0,1) map to positive roots below.
    std::vector<Integer> rev(n + 1);
    for (std::size_t i = 0; i <= n; ++i) rev[n - i] = acc[i];
    return sign_variations(taylor_shift(IntPoly(std::move(rev)), 1));
}

std::vector<RealRoot> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    std::vector<RealRoot> roots;
    if (p.degree() == 0) return roots;
    for (const auto& f : sqfree_decompose(p).factors)
        for (auto& r : isolate_squarefree(f.factor)) roots.push_back({r, f.multiplicity});
    auto by_lo = [](const RealRoot& x, const RealRoot& y) { return x.value.lo < y.value.lo; };
    std::sort(roots.begin(), roots.end(), by_lo);
    for (int it = 0;; ++it) {
        if (it > kRefineCap) throw std::logic_error("real root separation exceeded the bisection cap");
        bool clean = true;
        for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
            auto& x = roots[i].value;
            auto& y = roots[i + 1].value;
            if (x.hi < y.lo) continue;
            clean = false;
            x = x.refined();
            y = y.refined();
        }
        if (clean) break;
        std::sort(roots.begin(), roots.end(), by_lo);
    }
    return roots;
}

unsigned count_positive_roots(const IntPoly& p) {
    unsigned n = 0;
    for (const auto& r : isolate_real_roots(p))
        if (sgn(r.value.lo) > 0 || (sgn(r.value.hi) > 0 && !r.value.is_rational() && sgn(r.value.lo) >= 0)) n += r.multiplicity;
    return n;
}

std::optional<RealAlgebraic> isolate_in(const IntPoly& q, const Rational& lo, const Rational& hi) {
    if (lo == hi) {
        if (sign_at(q, lo) == 0) return RealAlgebraic::rational(lo);
        return std::nullopt;
    }
    if (sign_at(q, lo) == 0 || sign_at(q, hi) == 0) return std::nullopt;
    if (descartes_bound(q, lo, hi) != 1) return std::nullopt;
    return RealAlgebraic{q.primitive(), lo, hi};
}

int sign_at(const IntPoly& p, const RealAlgebraic& a) {
    if (p.is_zero()) return 0;
    if (a.is_rational()) return sign_at(p, a.lo);
    IntPoly g = gcd_primitive(p, a.defining);
    if (g.degree() > 0 && sign_change(g, a.lo, a.hi)) return 0;
    IntPoly q = squarefree_part(p);
    RealAlgebraic b = a;
    for (int i = 0; i <= kRefineCap; ++i) {
        if (b.is_rational()) return sign_at(p, b.lo);
        if (sign_at(q, b.lo) != 0 && descartes_bound(q, b.lo, b.hi) == 0) return sign_at(p, b.lo);
        b = b.refined();
    }
    throw std::logic_error("sign_at: refinement cap exhausted");
}

int compare(const RealAlgebraic& a, const Rational& r) {
    if (a.is_rational()) return cmp(a.lo, r) < 0 ? -1 : (cmp(a.lo, r) > 0 ? 1 : 0);
    if (r < a.lo) return 1;
    if (r > a.hi) return -1;
    if (sign_at(a.defining, r) == 0) return 0;
    RealAlgebraic b = a;
    for (int i = 0; i <= kRefineCap; ++i) {
        if (r < b.lo) return 1;
        if (r > b.hi) return -1;
        b = b.refined();
        if (b.is_rational()) return b.lo < r ? -1 : 1;
    }
    throw std::logic_error("compare: refinement cap exhausted");
}

int compare(const RealAlgebraic& a, const RealAlgebraic& b) {
    if (a.is_rational()) return -compare(b, a.lo);
    if (b.is_rational()) return compare(a, b.lo);
    IntPoly g = gcd_primitive(a.defining, b.defining);
    const bool common = g.degree() > 0 && sign_change(g, a.lo, a.hi) && sign_change(g, b.lo, b.hi);
    RealAlgebraic x = a;
    RealAlgebraic y = b;
    for (int i = 0; i <= kRefineCap; ++i) {
        if (x.hi < y.lo) return -1;
        if (y.hi < x.lo) return 1;
        if (x.is_rational()) return -compare(y, x.lo);
        if (y.is_rational()) return compare(x, y.lo);
        if (common) {
            Rational l = std::max(x.lo, y.lo);
            Rational h = std::min(x.hi, y.hi);
            if (l == h ? sign_at(g, l) == 0 : sign_change(g, l, h)) return 0;
        }
        x = x.refined();
        y = y.refined();
    }
    throw std::logic_error("compare: refinement cap exhausted");
}

RealAlgebraic power(const RealAlgebraic& a, unsigned k) {
    if (k == 0) return RealAlgebraic::rational(1);
    if (sgn(a.lo) < 0) throw std::invalid_argument("power: base must be nonnegative");
    if (a.is_rational()) {
        Rational r = 1;
        for (unsigned i = 0; i < k; ++i) r *= a.lo;
        return RealAlgebraic::rational(r);
    }
    if (k == 1) return a;
    IntPoly q = resultant_power(a.defining, k);
    RealAlgebraic b = a;
    for (int i = 0; i <= kRefineCap; ++i) {
        Rational lo = 1, hi = 1;
        for (unsigned j = 0; j < k; ++j) {
            lo *= b.lo;
            hi *= b.hi;
        }
        if (auto r = isolate_in(q, lo, hi)) return *r;
        b = b.refined();
        if (b.is_rational()) return power(b, k);
    }
    throw std::logic_error("power: refinement cap exhausted");
}

}  // namespace fdgb
