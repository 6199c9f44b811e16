#include "fdgb/int_poly.hpp"

#include <stdexcept>
#include <utility>

namespace fdgb {

namespace {

// Coefficient-ring glue for the subresultant loop: Z and Z[x].
template <class R>
struct Ring;

template <>
struct Ring<Integer> {
    static bool is_zero(const Integer& a) { return sgn(a) == 0; }
    static Integer one() { return 1; }
    static Integer div(const Integer& a, const Integer& b) {
        Integer r;
        mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return r;
    }
};

template <>
struct Ring<IntPoly> {
    static bool is_zero(const IntPoly& a) { return a.is_zero(); }
    static IntPoly one() { return IntPoly::constant(1); }
    static IntPoly div(const IntPoly& a, const IntPoly& b) {
        if (b.degree() == 0) return divexact(a, b.lc());
        return exact_quotient(a, b);
    }
};

template <class R>
using UPoly = std::vector<R>;

template <class R>
void trim(UPoly<R>& p) {
    while (!p.empty() && Ring<R>::is_zero(p.back())) p.pop_back();
}

template <class R>
int deg(const UPoly<R>& p) {
    return static_cast<int>(p.size()) - 1;
}

template <class R>
R power(const R& a, unsigned e) {
    R r = Ring<R>::one();
    for (unsigned i = 0; i < e; ++i) r = r * a;
    return r;
}

template <class R>
UPoly<R> prem(const UPoly<R>& a, const UPoly<R>& b) {
    UPoly<R> r = a;
    const int n = deg(b);
    const R& lead = b.back();
    for (int top = deg(r); top >= n; --top) {
        R t = r[top];
        for (int j = 0; j < top; ++j) r[j] = r[j] * lead;
        r[top] = R();
        if (Ring<R>::is_zero(t)) continue;
        const int k = top - n;
        for (int j = 0; j < n; ++j) r[k + j] -= t * b[j];
    }
    r.resize(static_cast<std::size_t>(std::max(n, 0)));
    trim(r);
    return r;
}

// Subresultant PRS resultant of two polynomials in u over R.
template <class R>
R subresultant(UPoly<R> a, UPoly<R> b) {
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return R();
    bool negate = false;
    if (deg(a) < deg(b)) {
        std::swap(a, b);
        if (deg(a) % 2 == 1 && deg(b) % 2 == 1) negate = true;
    }
    if (deg(b) == 0) {
        R r = power(b[0], static_cast<unsigned>(deg(a)));
        return negate ? R(-r) : r;
    }
    R g = Ring<R>::one();
    R h = Ring<R>::one();
    while (true) {
        const int d = deg(a) - deg(b);
        if (deg(a) % 2 == 1 && deg(b) % 2 == 1) negate = !negate;
        UPoly<R> r = prem(a, b);
        a = std::move(b);
        if (r.empty()) return R();
        R denom = g * power(h, static_cast<unsigned>(d));
        for (auto& c : r) c = Ring<R>::div(c, denom);
        b = std::move(r);
        g = a.back();
        if (d == 0) {
            // h unchanged
        } else {
            h = Ring<R>::div(power(g, static_cast<unsigned>(d)), power(h, static_cast<unsigned>(d - 1)));
        }
        if (deg(b) == 0) {
            const auto da = static_cast<unsigned>(deg(a));
            R out = Ring<R>::div(power(b[0], da), power(h, da - 1));
            return negate ? R(-out) : out;
        }
    }
}

UPoly<IntPoly> lift(const IntPoly& p) {
    UPoly<IntPoly> r;
    r.reserve(p.size());
    for (const auto& c : p.coeffs()) r.push_back(IntPoly::constant(c));
    trim(r);
    return r;
}

}  // namespace

Integer resultant(const IntPoly& p, const IntPoly& q) {
    return subresultant<Integer>(p.coeffs(), q.coeffs());
}

IntPoly resultant_power(const IntPoly& q, unsigned d) {
    if (d == 0) throw std::invalid_argument("resultant_power: delta must be positive");
    if (q.is_zero()) throw std::invalid_argument("resultant_power: zero polynomial");
    if (q.degree() == 0) return IntPoly::constant(1);
    if (d == 1) return squarefree_part(q);
    UPoly<IntPoly> a(d + 1);
    a[0] = IntPoly{0, -1};
    a[d] = IntPoly::constant(1);
    return squarefree_part(subresultant<IntPoly>(std::move(a), lift(q)));
}

IntPoly resultant_product(const IntPoly& p) {
    if (p.is_zero() || sgn(p.trailing_constant()) == 0)
        throw std::invalid_argument("resultant_product: p(0) must be nonzero");
    const auto n = static_cast<std::size_t>(p.degree());
    if (n == 0) return IntPoly::constant(1);
    UPoly<IntPoly> a(n + 1);
    for (std::size_t i = 0; i <= n; ++i) a[n - i] = IntPoly::monomial(p.coeffs()[i], i);
    return subresultant<IntPoly>(std::move(a), lift(p)).primitive();
}

IntPoly resultant_ratio(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero() || sgn(p.trailing_constant()) == 0 || sgn(q.trailing_constant()) == 0)
        throw std::invalid_argument("resultant_ratio: constant terms must be nonzero");
    if (p.degree() == 0 || q.degree() == 0) return IntPoly::constant(1);
    UPoly<IntPoly> b(q.size());
    for (std::size_t j = 0; j < q.size(); ++j) b[j] = IntPoly::monomial(q.coeffs()[j], j);
    return subresultant<IntPoly>(lift(p), std::move(b)).primitive();
}

}  // namespace fdgb
