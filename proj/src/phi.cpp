#include "fdgb/phi.hpp"

#include <numeric>
#include <stdexcept>

#include "fdgb/ip_search.hpp"

namespace fdgb {

namespace {

void require_core(const IntPoly& f, const char* who) {
    if (f.is_zero() || sgn(f.lc()) <= 0 || sgn(f.trailing_constant()) == 0 || f.content() != 1)
        throw std::invalid_argument(std::string(who) + ": expected a primitive polynomial with lc > 0 and f(0) != 0");
}

bool all_positive(const IntPoly& p) {
    for (const auto& c : p.coeffs())
        if (sgn(c) <= 0) return false;
    return !p.is_zero();
}

Rational frac(const Integer& a, const Integer& b) {
    Rational q(a, b);
    q.canonicalize();
    return q;
}

IntPoly x_pow_minus_one(unsigned d) { return IntPoly::monomial(1, d) - IntPoly{1}; }

IntPoly geometric(unsigned d) {
    std::vector<Integer> c(d, 1);
    return IntPoly(std::move(c));
}

// Simplest fraction in [lo, hi] (continued fractions).
Rational simplest_between(Rational lo, Rational hi) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (fl == lo) return lo;
    if (fl + 1 <= hi) return Rational(fl + 1);
    Rational a = 1 / (hi - fl), b = 1 / (lo - fl);
    return fl + 1 / simplest_between(a, b);
}

// Rational roots of p in the open interval (a, b).
std::vector<Rational> rational_roots_in(const IntPoly& p, const Rational& a, const Rational& b, bool& all_rational) {
    std::vector<Rational> out;
    all_rational = true;
    IntPoly q = squarefree_part(p);
    const Integer lc = abs(q.lc());
    const Rational tol(1, lc * lc * 2);
    for (const auto& r : isolate_real_roots(q)) {
        if (compare(r.value, a) <= 0 || compare(r.value, b) >= 0) continue;
        if (r.value.is_rational()) {
            out.push_back(r.value.lo);
            continue;
        }
        RealAlgebraic v = r.value.refined_to(tol);
        Rational c = simplest_between(v.lo, v.hi);
        if (sign_at(q, c) == 0) {
            out.push_back(c);
        } else {
            all_rational = false;
        }
    }
    return out;
}

std::optional<RealRoot> unique_positive_root(const IntPoly& f) {
    std::optional<RealRoot> out;
    for (const auto& r : isolate_real_roots(f))
        if (compare(r.value, Rational(0)) > 0) out = r;
    return out;
}

// Roots of unity test: the product of gcd(g, Phi_m) over phi(m) <= deg g
// recovers the square-free part g exactly; returns the lcm of those m.
std::optional<unsigned> all_roots_of_unity(const IntPoly& f) {
    IntPoly g = squarefree_part(f);
    const auto d = static_cast<unsigned>(g.degree());
    IntPoly prod{1};
    unsigned delta = 1;
    for (unsigned m = 1; m <= 2 * d * d && prod.degree() < g.degree(); ++m) {
        if (euler_phi(m) > d) continue;
        IntPoly c = cyclotomic(m);
        if (!divide_exact(g, c)) continue;
        prod *= c;
        delta = std::lcm(delta, m);
    }
    if (prod != g) return std::nullopt;
    return delta;
}

Phi1Verdict decide(const IntPoly& f, int depth);

Phi1Verdict finish_yes(Phi1Verdict v, Phi1Kind kind, IntPoly g) {
    if (sgn(g.lc()) <= 0 || g.lc() != 1 || !in_phi0(v.core * g))
        throw std::logic_error("membership_phi1: witness failed the Phi0 check");
    v.kind = kind;
    v.witness = std::move(g);
    return v;
}

Phi1Verdict finish_no(Phi1Verdict v, NoReason r) {
    v.kind = Phi1Kind::No;
    v.reason = r;
    return v;
}

Phi1Verdict decide(const IntPoly& f, int depth) {
    if (depth > 2) throw std::logic_error("membership_phi1: recursion deeper than two levels");
    Phi1Verdict v;
    v.core = f;
    auto at = [&v](const char* s) {
        v.trace.emplace_back(s);
        v.step = s;
    };

    at("1");
    if (in_phi0(f)) return finish_yes(v, Phi1Kind::InPhi0, IntPoly{1});

    at("2");
    const unsigned npos = count_positive_roots(f);
    if (npos == 0) {
        IntPoly g = phi0_witness_no_positive_roots(f);
        const unsigned limit = std::min<unsigned>(static_cast<unsigned>(g.degree()), 13);
        if (limit > 0)
            if (auto w = find_witness(f, limit - 1)) g = w->g;
        return finish_yes(v, Phi1Kind::Yes, g);
    }

    at("3");
    if (npos >= 2) return finish_no(v, NoReason::TwoPositiveRoots);

    const RealAlgebraic xp = unique_positive_root(f)->value;
    at("4.1");
    const int s1 = sgn(eval(f, Integer(1)));
    if (s1 > 0) return finish_no(v, NoReason::PositiveRootBelowOne);

    if (s1 == 0) {
        if (auto d = all_roots_of_unity(f)) {
            at("4.2");
            v.delta = *d;
            v.fstar = compute_fstar(f, *d);
            if (*v.fstar != IntPoly{-1, 1}) return finish_no(v, NoReason::FstarFails);
            return finish_yes(v, Phi1Kind::Yes, exact_quotient(x_pow_minus_one(*d), f));
        }
        if (!has_root_outside(f, xp)) {
            auto circle = roots_on_circle(f, xp);
            if (!circle.has_minus_xplus && circle.complex_pairs.empty()) {
                at("4.3");
                IntPoly q = exact_quotient(f, IntPoly{-1, 1});
                const unsigned top = q.is_constant() ? 1 : delta_support(q);
                for (unsigned d = 1; d <= top; ++d) {
                    if (top % d != 0) continue;
                    IntPoly g = geometric(d);
                    if (in_phi0(f * g)) {
                        v.delta = d;
                        return finish_yes(v, Phi1Kind::Yes, g);
                    }
                }
                return finish_no(v, NoReason::DeltaSearchFails);
            }
        }
    }

    at("4.4");
    if (has_root_outside(f, xp)) return finish_no(v, NoReason::RootOutsideCircle);

    const auto circle = roots_on_circle(f, xp);
    if (!circle.has_minus_xplus && circle.complex_pairs.empty()) {
        at("4.7");
        v.kind = Phi1Kind::ConjecturalYes;
        return v;
    }

    at("4.5");
    const auto delta = minimal_delta(f, xp);
    if (!delta) return finish_no(v, NoReason::NonUnityRatio);

    at("4.6");
    v.delta = *delta;
    IntPoly fs = compute_fstar(f, *delta);
    v.fstar = fs;
    if (fs.lc() != f.lc()) return finish_no(v, NoReason::LcMismatch);
    Phi1Verdict inner = decide(fs, depth + 1);
    for (const auto& t : inner.trace) v.trace.push_back("f*:" + t);
    switch (inner.kind) {
    case Phi1Kind::No:
        return finish_no(v, NoReason::FstarFails);
    case Phi1Kind::ConjecturalYes:
        v.kind = Phi1Kind::ConjecturalYes;
        return v;
    default: {
        IntPoly s = exact_quotient(compose_power(fs, *delta), f);
        return finish_yes(v, Phi1Kind::Yes, s * compose_power(*inner.witness, *delta));
    }
    }
}

}  // namespace

bool in_phi0(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("in_phi0: zero polynomial");
    if (sgn(f.lc()) <= 0) return false;
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (sgn(f.coeffs()[i]) > 0) return false;
    return true;
}

Normalized normalize(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("normalize: zero polynomial");
    if (sgn(f.lc()) < 0) throw std::invalid_argument("normalize: negative leading coefficient");
    Normalized n;
    n.content = f.content();
    n.shift = f.x_valuation();
    n.core = shift_down(divexact(f, n.content), n.shift);
    return n;
}

IntPoly compute_fstar(const IntPoly& f, unsigned delta) {
    require_core(f, "compute_fstar");
    if (delta == 0) throw std::invalid_argument("compute_fstar: delta must be positive");
    const auto n = static_cast<std::size_t>(f.degree());
    if (n == 0) return f;
    std::vector<Rational> fm(n);  // x^n = -sum fm_i x^i modulo f
    for (std::size_t i = 0; i < n; ++i) fm[i] = Rational(f.coeffs()[i]) / f.lc();

    // Echelon rows with the combination of x^(delta j) that produced them.
    struct Row {
        std::vector<Rational> v;
        std::vector<Rational> comb;
        std::size_t pivot;
    };
    std::vector<Row> rows;
    std::vector<Rational> r(n);
    r[0] = 1;
    for (std::size_t k = 0;; ++k) {
        if (k > n) throw std::logic_error("compute_fstar: no dependency found");
        std::vector<Rational> v = r;
        std::vector<Rational> comb(k + 1);
        comb[k] = 1;
        for (const auto& row : rows) {
            if (sgn(v[row.pivot]) == 0) continue;
            Rational t = v[row.pivot] / row.v[row.pivot];
            for (std::size_t i = 0; i < n; ++i) v[i] -= t * row.v[i];
            for (std::size_t i = 0; i < row.comb.size(); ++i) comb[i] -= t * row.comb[i];
        }
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i)
            if (sgn(v[i]) != 0) piv = i;
        if (piv == n) {
            Integer den = 1;
            for (const auto& c : comb) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
            std::vector<Integer> out;
            for (const auto& c : comb) out.push_back(Rational(c * den).get_num());
            return IntPoly(std::move(out)).primitive();
        }
        rows.push_back({std::move(v), std::move(comb), piv});
        for (unsigned s = 0; s < delta; ++s) {
            Rational top = r[n - 1];
            for (std::size_t i = n - 1; i > 0; --i) r[i] = r[i - 1] - top * fm[i];
            r[0] = -top * fm[0];
        }
    }
}

std::optional<unsigned> minimal_delta(const IntPoly& f, const RealAlgebraic& x_plus) {
    const auto circle = roots_on_circle(f, x_plus);
    if (!circle.has_minus_xplus && circle.complex_pairs.empty())
        throw std::invalid_argument("minimal_delta: no other root on the circle");
    unsigned delta = circle.has_minus_xplus ? 2 : 1;
    const auto max_deg = static_cast<unsigned>(f.degree() * f.degree());
    for (const auto& z : circle.complex_pairs) {
        auto m = ratio_order(f, z, x_plus, max_deg);
        if (!m) return std::nullopt;
        delta = std::lcm(delta, *m);
    }
    return delta;
}

const char* to_string(Phi1Kind k) {
    switch (k) {
    case Phi1Kind::InPhi0: return "InPhi0";
    case Phi1Kind::Yes: return "Yes";
    case Phi1Kind::No: return "No";
    case Phi1Kind::ConjecturalYes: return "ConjecturalYes";
    }
    return "?";
}

const char* to_string(NoReason r) {
    switch (r) {
    case NoReason::TwoPositiveRoots: return "TwoPositiveRoots";
    case NoReason::PositiveRootBelowOne: return "PositiveRootBelowOne";
    case NoReason::RootOutsideCircle: return "RootOutsideCircle";
    case NoReason::NonUnityRatio: return "NonUnityRatio";
    case NoReason::FstarFails: return "FstarFails";
    case NoReason::LcMismatch: return "LcMismatch";
    case NoReason::DeltaSearchFails: return "DeltaSearchFails";
    }
    return "?";
}

Phi1Verdict membership_phi1(const IntPoly& f) { return decide(normalize(f).core, 0); }

PolyaData polya_exponent(const IntPoly& f) {
    if (f.is_zero() || sgn(f.lc()) <= 0 || sgn(f.trailing_constant()) <= 0 || count_positive_roots(f) != 0)
        throw std::invalid_argument("polya_exponent: f must be positive on [0, inf)");
    const auto n = static_cast<unsigned>(f.degree());
    PolyaData out;
    if (n == 0) {
        out.lambda_lower = Rational(f.lc());
        out.lambda_exact = true;
        out.L = Rational(f.lc());
        return out;
    }

    // phi(x) = F(x, 1 - x) = sum a_k x^k (1 - x)^(n - k)
    IntPoly phi;
    for (unsigned k = 0; k <= n; ++k) phi += f[k] * (IntPoly::monomial(1, k) * pow(IntPoly{1, -1}, n - k));
    Rational lam = std::min(Rational(f[0]), Rational(f.lc()));
    bool exact = true;
    IntPoly dphi = derivative(phi);
    if (!dphi.is_zero()) {
        for (const auto& c : rational_roots_in(dphi, 0, 1, exact)) lam = std::min(lam, eval(phi, c));
    }
    if (!exact) {
        // Certified lower bound by subdivision of [0, 1].
        Rational sampled = lam;
        for (unsigned pieces = 2;; pieces *= 2) {
            if (pieces > (1u << 20)) throw std::logic_error("polya_exponent: subdivision cap exhausted");
            Rational low = lam;
            for (unsigned i = 0; i < pieces; ++i) {
                RInterval piece(frac(i, pieces), frac(i + 1, pieces));
                low = std::min(low, eval(phi, piece).lo);
                sampled = std::min(sampled, eval(phi, piece.mid()));
            }
            if (sgn(low) > 0 && 2 * low >= sampled) {
                lam = low;
                break;
            }
        }
    }
    out.lambda_lower = lam;
    out.lambda_exact = exact;

    Rational L = 0;
    Integer nf, kf, rest;
    mpz_fac_ui(nf.get_mpz_t(), n);
    for (unsigned k = 0; k <= n; ++k) {
        mpz_fac_ui(kf.get_mpz_t(), k);
        mpz_fac_ui(rest.get_mpz_t(), n - k);
        L = std::max(L, frac(kf * rest * abs(f[k]), nf));
    }
    out.L = L;

    Rational bound = Rational(n * (n - 1)) * L / (2 * lam) - n;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
    fl += 1;
    out.N_f = sgn(fl) > 0 ? static_cast<unsigned>(fl.get_ui()) : 0;
    if (!all_positive(pow(IntPoly{1, 1}, out.N_f) * f))
        throw std::logic_error("polya_exponent: positivity check failed");
    return out;
}

unsigned minimal_positivity_exponent(const IntPoly& f) {
    const unsigned cap = polya_exponent(f).N_f;
    IntPoly h = f;
    for (unsigned k = 0; k <= cap; ++k) {
        if (all_positive(h)) return k;
        h *= IntPoly{1, 1};
    }
    throw std::logic_error("minimal_positivity_exponent: exceeded the effective bound");
}

IntPoly phi0_witness_no_positive_roots(const IntPoly& f) {
    if (in_phi0(f)) return IntPoly{1};
    require_core(f, "phi0_witness_no_positive_roots");
    if (count_positive_roots(f) != 0) throw std::invalid_argument("phi0_witness_no_positive_roots: f has a positive root");
    const unsigned N = all_positive(f) ? 0 : polya_exponent(f).N_f;
    const IntPoly lift = pow(IntPoly{1, 1}, N);
    const IntPoly h = lift * f;
    const IntPoly geo = geometric(static_cast<unsigned>(h.degree()) + 1);
    const IntPoly s = geo * h;
    Rational worst = 0;
    for (std::size_t i = 1; i < s.size(); ++i) worst = std::max(worst, frac(s[i - 1], s[i]));
    Integer M;
    mpz_cdiv_q(M.get_mpz_t(), worst.get_num_mpz_t(), worst.get_den_mpz_t());
    M += 1;
    IntPoly g = IntPoly(std::vector<Integer>{-M, 1}) * geo * lift;
    if (!in_phi0(f * g)) throw std::logic_error("phi0_witness_no_positive_roots: construction failed");
    return g;
}

}  // namespace fdgb
