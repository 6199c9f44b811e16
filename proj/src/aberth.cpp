#include "aberth.hpp"

#include <mpfr.h>

#include <cmath>
#include <utility>

namespace fdgb::detail {

namespace {

class Real {
public:
    explicit Real(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

struct Cx {
    Real re;
    Real im;
    explicit Cx(mpfr_prec_t prec) : re(prec), im(prec) {}
};

// Scratch registers for one iteration context.
struct Ctx {
    mpfr_prec_t prec;
    Real t1, t2, t3;
    explicit Ctx(mpfr_prec_t p) : prec(p), t1(p), t2(p), t3(p) {}

    // r = a * b (r may alias a or b)
    void mul(Cx& r, const Cx& a, const Cx& b) {
        mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
        mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
        mpfr_mul(t3.get(), a.re.get(), b.im.get(), MPFR_RNDN);
        mpfr_fma(r.im.get(), a.im.get(), b.re.get(), t3.get(), MPFR_RNDN);
        mpfr_sub(r.re.get(), t1.get(), t2.get(), MPFR_RNDN);
    }
    // r = a / b
    void div(Cx& r, const Cx& a, const Cx& b) {
        Real d(prec), x(prec), y(prec);
        mpfr_sqr(d.get(), b.re.get(), MPFR_RNDN);
        mpfr_fma(d.get(), b.im.get(), b.im.get(), d.get(), MPFR_RNDN);
        mpfr_mul(x.get(), a.re.get(), b.re.get(), MPFR_RNDN);
        mpfr_fma(x.get(), a.im.get(), b.im.get(), x.get(), MPFR_RNDN);
        mpfr_mul(y.get(), a.im.get(), b.re.get(), MPFR_RNDN);
        mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
        mpfr_sub(y.get(), y.get(), t1.get(), MPFR_RNDN);
        mpfr_div(r.re.get(), x.get(), d.get(), MPFR_RNDN);
        mpfr_div(r.im.get(), y.get(), d.get(), MPFR_RNDN);
    }
    void sub(Cx& r, const Cx& a, const Cx& b) {
        mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
        mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    }
    void add(Cx& r, const Cx& a, const Cx& b) {
        mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
        mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    }
    // |a|^2 as a double, fine for step-size decisions
    double norm2(const Cx& a) {
        double x = mpfr_get_d(a.re.get(), MPFR_RNDN);
        double y = mpfr_get_d(a.im.get(), MPFR_RNDN);
        return x * x + y * y;
    }
};

}  // namespace

std::vector<ApproxRoot> aberth(const IntPoly& p, unsigned prec, const std::vector<ApproxRoot>& start) {
    const int n = p.degree();
    std::vector<ApproxRoot> out;
    if (n <= 0) return out;
    const auto pr = static_cast<mpfr_prec_t>(prec);
    Ctx ctx(pr);

    std::vector<Real> a;
    a.reserve(p.size());
    for (const auto& c : p.coeffs()) {
        a.emplace_back(pr);
        mpfr_set_z(a.back().get(), c.get_mpz_t(), MPFR_RNDN);
    }

    std::vector<Cx> z;
    z.reserve(static_cast<std::size_t>(n));
    if (static_cast<int>(start.size()) == n) {
        for (const auto& s : start) {
            z.emplace_back(pr);
            mpfr_set_q(z.back().re.get(), s.re.get_mpq_t(), MPFR_RNDN);
            mpfr_set_q(z.back().im.get(), s.im.get_mpq_t(), MPFR_RNDN);
        }
    } else {
        // Initial points on a circle whose radius is the geometric mean of the root moduli.
        long e0 = 0, en = 0;
        std::size_t low = p.x_valuation();
        double m0 = mpz_get_d_2exp(&e0, p.coeffs()[low].get_mpz_t());
        double mn = mpz_get_d_2exp(&en, p.lc().get_mpz_t());
        double logr = (std::log(std::fabs(m0)) - std::log(std::fabs(mn)) + double(e0 - en) * std::log(2.0)) / double(n - static_cast<int>(low) > 0 ? n - static_cast<int>(low) : 1);
        double r = std::exp(logr);
        if (!std::isfinite(r) || r <= 0) r = 1;
        for (int k = 0; k < n; ++k) {
            double t = 2 * M_PI * k / n + 0.4;
            z.emplace_back(pr);
            mpfr_set_d(z.back().re.get(), r * std::cos(t), MPFR_RNDN);
            mpfr_set_d(z.back().im.get(), r * std::sin(t), MPFR_RNDN);
        }
    }

    Cx pv(pr), dv(pr), w(pr), s(pr), tmp(pr), one(pr), corr(pr);
    mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
    const double tol = std::ldexp(1.0, -static_cast<int>(prec) + 8);
    const int max_iter = 200 + 20 * n;
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (int it = 0; it < max_iter; ++it) {
        bool all = true;
        for (int k = 0; k < n; ++k) {
            if (done[k]) continue;
            // Horner for p and p'
            mpfr_set(pv.re.get(), a[n].get(), MPFR_RNDN);
            mpfr_set_zero(pv.im.get(), 1);
            mpfr_set_zero(dv.re.get(), 1);
            mpfr_set_zero(dv.im.get(), 1);
            for (int i = n - 1; i >= 0; --i) {
                ctx.mul(dv, dv, z[k]);
                ctx.add(dv, dv, pv);
                ctx.mul(pv, pv, z[k]);
                mpfr_add(pv.re.get(), pv.re.get(), a[i].get(), MPFR_RNDN);
            }
            if (mpfr_zero_p(pv.re.get()) && mpfr_zero_p(pv.im.get())) {
                done[k] = true;
                continue;
            }
            ctx.div(w, pv, dv);
            mpfr_set_zero(s.re.get(), 1);
            mpfr_set_zero(s.im.get(), 1);
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                ctx.sub(tmp, z[k], z[j]);
                ctx.div(tmp, one, tmp);
                ctx.add(s, s, tmp);
            }
            // corr = w / (1 - w s)
            ctx.mul(tmp, w, s);
            ctx.sub(tmp, one, tmp);
            ctx.div(corr, w, tmp);
            if (!mpfr_number_p(corr.re.get()) || !mpfr_number_p(corr.im.get())) {
                done[k] = true;
                continue;
            }
            ctx.sub(z[k], z[k], corr);
            double step = ctx.norm2(corr);
            double size = std::max(1.0, ctx.norm2(z[k]));
            if (step <= tol * tol * size)
                done[k] = true;
            else
                all = false;
        }
        if (all) break;
    }

    out.reserve(static_cast<std::size_t>(n));
    for (auto& r : z) {
        ApproxRoot ar;
        mpfr_get_q(ar.re.get_mpq_t(), r.re.get());
        mpfr_get_q(ar.im.get_mpq_t(), r.im.get());
        out.push_back(std::move(ar));
    }
    return out;
}

}  // namespace fdgb::detail
