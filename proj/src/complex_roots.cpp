#include "fdgb/complex_roots.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "aberth.hpp"
#include "fdgb/real_roots.hpp"

namespace fdgb {

namespace {

unsigned dyadic_exponent(const Rational& q) {
    const auto& d = q.get_den();
    if (mpz_popcount(d.get_mpz_t()) != 1) throw std::invalid_argument("certify_square: centre must be dyadic");
    return static_cast<unsigned>(mpz_scan1(d.get_mpz_t(), 0));
}

Integer isqrt_floor(const Integer& a) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

Rational pow2(long e) {
    Integer one = 1;
    if (e >= 0) return Rational(one << static_cast<unsigned long>(e));
    return Rational(one, one << static_cast<unsigned long>(-e));
}

// Rounding toward zero keeps conjugate centres exactly conjugate.
Rational round_sym(const Rational& q, unsigned bits) {
    if (sgn(q) >= 0) return round_down(q, bits);
    return -round_down(-q, bits);
}

struct CPoint {
    Rational re;
    Rational im;
};

CPoint mul(const CPoint& a, const CPoint& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

// Exact p(c) and p'(c).
std::pair<CPoint, CPoint> eval_with_derivative(const IntPoly& p, const CPoint& c) {
    CPoint v{Rational(p.lc()), 0};
    CPoint d{0, 0};
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        d = mul(d, c);
        d.re += v.re;
        d.im += v.im;
        v = mul(v, c);
        v.re += p.coeffs()[i];
    }
    return {v, d};
}

CBox square_box(const Rational& cre, const Rational& cim, const Rational& r) {
    return {RInterval(cre - r, cre + r), RInterval(cim - r, cim + r)};
}

double to_double(const Rational& q) { return q.get_d(); }

std::optional<std::vector<RootBox>> certify_all(const IntPoly& q, const std::vector<detail::ApproxRoot>& approx,
                                                std::size_t nreal, unsigned prec) {
    const std::size_t n = approx.size();
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return abs(approx[a].im) < abs(approx[b].im); });
    std::vector<CPoint> centres;
    std::vector<bool> is_real;
    std::size_t uppers = 0, lowers = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const auto& a = approx[idx[t]];
        if (t < nreal) {
            centres.push_back({round_sym(a.re, prec), 0});
            is_real.push_back(true);
        } else if (sgn(a.im) > 0) {
            centres.push_back({round_sym(a.re, prec), round_sym(a.im, prec)});
            is_real.push_back(false);
            ++uppers;
        } else {
            ++lowers;
        }
    }
    if (uppers != lowers || 2 * uppers + nreal != n) return std::nullopt;
    const std::size_t m = centres.size();
    std::vector<double> xs, ys;
    for (const auto& c : centres) {
        xs.push_back(to_double(c.re));
        ys.push_back(to_double(c.im));
    }
    for (std::size_t i = 0; i < m; ++i)
        if (!is_real[i]) {
            xs.push_back(xs[i]);
            ys.push_back(-ys[i]);
        }
    std::vector<RootBox> out;
    for (std::size_t i = 0; i < m; ++i) {
        double dmin = INFINITY;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            dmin = std::min(dmin, std::hypot(xs[i] - xs[j], ys[i] - ys[j]));
        }
        if (!std::isfinite(dmin)) dmin = 1 + std::fabs(xs[i]);
        if (dmin <= 0) return std::nullopt;
        Rational r(dmin / 4);
        bool ok = false;
        for (unsigned t = 0; t < prec / 2; ++t) {
            if (certify_square(q, centres[i].re, centres[i].im, r)) {
                ok = true;
                break;
            }
            r /= 4;
        }
        if (!ok) return std::nullopt;
        RootBox b{q, square_box(centres[i].re, centres[i].im, r), 1, is_real[i]};
        if (!b.real && sgn(b.box.im.lo) <= 0) return std::nullopt;
        out.push_back(b);
        if (!b.real) out.push_back(b.conj());
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (!out[i].box.disjoint(out[j].box)) return std::nullopt;
    return out;
}

std::vector<RootBox> isolate_squarefree(const IntPoly& q) {
    if (q.degree() <= 0) return {};
    const std::size_t nreal = isolate_real_roots(q).size();
    std::vector<detail::ApproxRoot> approx;
    unsigned prec = 96;
    for (int attempt = 0; attempt < 10; ++attempt) {
        approx = detail::aberth(q, prec, approx);
        if (auto boxes = certify_all(q, approx, nreal, prec)) return *boxes;
        prec *= 2;
    }
    throw std::logic_error("complex root isolation failed to certify");
}

}  // namespace

bool certify_square(const IntPoly& p, const Rational& cre, const Rational& cim, const Rational& r) {
    const int n = p.degree();
    if (n < 1 || sgn(r) <= 0) return false;
    const unsigned k = std::max(dyadic_exponent(cre), dyadic_exponent(cim));
    const Integer scale = Integer(1) << k;
    const Integer u = Rational(cre * scale).get_num();
    const Integer v = Rational(cim * scale).get_num();
    const auto N = static_cast<std::size_t>(n);

    // s(x) = 2^(kn) p(x / 2^k); S(t) = s(U + t) over the Gaussian integers.
    std::vector<Integer> sr(N + 1), si(N + 1);
    for (std::size_t i = 0; i <= N; ++i) sr[i] = p.coeffs()[i] << static_cast<unsigned long>(k * (N - i));
    Integer t1, t2;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = N; j-- > i;) {
            t1 = u * sr[j + 1] - v * si[j + 1];
            t2 = u * si[j + 1] + v * sr[j + 1];
            sr[j] += t1;
            si[j] += t2;
        }
    }
    // Coefficient j of p(c + h) is S_j 2^(k(j-n)).
    auto upper_abs = [&](std::size_t j) {
        Integer a = sr[j] * sr[j] + si[j] * si[j];
        if (sgn(a) == 0) return Rational(0);
        return Rational(Rational(isqrt_floor(a) + 1) * pow2(static_cast<long>(k) * (static_cast<long>(j) - n)));
    };
    const Rational t1_low = Rational(isqrt_floor(sr[1] * sr[1] + si[1] * si[1])) * pow2(static_cast<long>(k) * (1 - n));
    if (sgn(t1_low) == 0) return false;
    const Rational rho = r * 3 / 2;
    Rational sum = 0;
    Rational rp = rho;
    for (std::size_t j = 2; j <= N; ++j) {
        sum += static_cast<unsigned long>(j) * upper_abs(j) * rp;
        rp *= rho;
    }
    // With Y = 1/p'(c): |1 - Y p'(z)| <= q on the disc |z - c| <= rho.
    const Rational qc = sum / t1_low;
    if (qc >= 1) return false;
    return upper_abs(0) / t1_low + qc * rho < r;
}

RootBox RootBox::refined() const {
    const Rational r = width() / 2;
    const Rational target = r / 4;
    const CPoint c0{box.re.mid(), box.im.mid()};
    // bits so that 2^-bits <= target / 64
    unsigned bits = 6;
    while (pow2(-static_cast<long>(bits)) > target / 64) ++bits;

    CPoint c = c0;
    for (int it = 0; it < 12; ++it) {
        auto [pv, dv] = eval_with_derivative(defining, c);
        Rational d2 = dv.re * dv.re + dv.im * dv.im;
        if (sgn(d2) == 0) break;
        CPoint step{(pv.re * dv.re + pv.im * dv.im) / d2, (pv.im * dv.re - pv.re * dv.im) / d2};
        c = {round_sym(c.re - step.re, bits), real ? Rational(0) : round_sym(c.im - step.im, bits)};
        Rational s2 = step.re * step.re + step.im * step.im;
        if (s2 * 4096 * 4096 < target * target) break;
    }
    auto margin_of = [&](const CPoint& p) {
        Rational m = std::min<Rational>(p.re - box.re.lo, box.re.hi - p.re);
        m = std::min<Rational>(m, std::min<Rational>(p.im - box.im.lo, box.im.hi - p.im));
        return m;
    };
    if (margin_of(c) <= 0) c = c0;
    Rational rr = std::min(target, margin_of(c));
    for (int t = 0; t < 64; ++t) {
        if (certify_square(defining, c.re, c.im, rr)) return {defining, square_box(c.re, c.im, rr), multiplicity, real};
        rr /= 2;
    }
    throw std::logic_error("root box refinement failed to certify");
}

RootBox RootBox::refined_to(const Rational& w) const {
    RootBox b = *this;
    for (int i = 0; b.width() > w; ++i) {
        if (i > kRefineCap) throw std::logic_error("refinement cap exhausted");
        b = b.refined();
    }
    return b;
}

std::vector<RootBox> isolate_complex_roots(const IntPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("isolate_complex_roots: degree must be positive");
    // Work with real and upper-half boxes; lower boxes are their mirror images.
    std::vector<RootBox> reps;
    for (const auto& f : sqfree_decompose(p).factors) {
        for (auto& b : isolate_squarefree(f.factor)) {
            if (!b.real && !b.upper()) continue;
            b.multiplicity = f.multiplicity;
            reps.push_back(std::move(b));
        }
    }
    auto meets = [](const RootBox& a, const RootBox& b) {
        if (!a.box.disjoint(b.box)) return true;
        if (a.real && !b.real) return !a.box.disjoint(b.box.conj());
        if (b.real && !a.real) return !b.box.disjoint(a.box.conj());
        return false;
    };
    for (int it = 0;; ++it) {
        if (it > kRefineCap) throw std::logic_error("complex root separation exceeded the refinement cap");
        bool clean = true;
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j) {
                if (!meets(reps[i], reps[j])) continue;
                clean = false;
                reps[i] = reps[i].refined();
                reps[j] = reps[j].refined();
            }
        if (clean) break;
    }
    std::vector<RootBox> out;
    for (const auto& b : reps) {
        out.push_back(b);
        if (!b.real) out.push_back(b.conj());
    }
    std::sort(out.begin(), out.end(), [](const RootBox& a, const RootBox& b) {
        if (a.box.re.lo != b.box.re.lo) return a.box.re.lo < b.box.re.lo;
        return a.box.im.lo < b.box.im.lo;
    });
    return out;
}

}  // namespace fdgb
