#include "fdgb/ip_search.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "fdgb/circle.hpp"
#include "fdgb/complex_roots.hpp"
#include "fdgb/phi.hpp"

namespace fdgb {

namespace {

// a[0] + sum_j a[j] x_j <= 0
using Row = std::vector<Integer>;

void make_primitive(Row& r) {
    Integer g = 0;
    for (const auto& c : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// A row with the set of original rows it was combined from.
struct Ineq {
    Row r;
    std::vector<std::uint64_t> from;
};

std::size_t history_size(const Ineq& q) {
    std::size_t n = 0;
    for (auto w : q.from) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

// Keeps the tightest constant per direction; nothing if infeasible.
std::optional<std::vector<Ineq>> tidy(std::vector<Ineq> rows) {
    std::map<std::vector<Integer>, Ineq> best;
    for (auto& q : rows) {
        make_primitive(q.r);
        std::vector<Integer> dir(q.r.begin() + 1, q.r.end());
        if (std::all_of(dir.begin(), dir.end(), [](const Integer& c) { return sgn(c) == 0; })) {
            if (sgn(q.r[0]) > 0) return std::nullopt;
            continue;
        }
        auto it = best.find(dir);
        if (it == best.end())
            best.emplace(std::move(dir), std::move(q));
        else if (q.r[0] > it->second.r[0] || (q.r[0] == it->second.r[0] && history_size(q) < history_size(it->second)))
            it->second = std::move(q);
    }
    std::vector<Ineq> out;
    for (auto& [dir, q] : best) out.push_back(std::move(q));
    return out;
}

// Eliminates variable k; combinations built from more than k + 1 original
// rows are implied by the others and dropped.
std::optional<std::vector<Ineq>> eliminate(const std::vector<Ineq>& rows, std::size_t k) {
    std::vector<Ineq> pos, neg, out;
    for (const auto& q : rows) {
        int s = sgn(q.r[k]);
        if (s > 0)
            pos.push_back(q);
        else if (s < 0)
            neg.push_back(q);
        else
            out.push_back(q);
    }
    for (const auto& p : pos)
        for (const auto& q : neg) {
            Ineq c;
            c.from.resize(p.from.size());
            for (std::size_t i = 0; i < p.from.size(); ++i) c.from[i] = p.from[i] | q.from[i];
            if (history_size(c) > k + 1) continue;
            Integer a = p.r[k], b = -q.r[k];
            c.r.resize(p.r.size());
            for (std::size_t i = 0; i < p.r.size(); ++i) c.r[i] = b * p.r[i] + a * q.r[i];
            out.push_back(std::move(c));
        }
    return tidy(std::move(out));
}

std::vector<Ineq> rows_of(const Phi0System& s) {
    std::vector<Ineq> rows;
    const std::size_t words = (s.matrix.size() + 63) / 64;
    for (std::size_t i = 0; i < s.matrix.size(); ++i) {
        Ineq q{s.matrix[i], std::vector<std::uint64_t>(words)};
        q.from[i / 64] |= std::uint64_t{1} << (i % 64);
        rows.push_back(std::move(q));
    }
    return rows;
}

std::vector<Row> strip(const std::vector<Ineq>& rows) {
    std::vector<Row> out;
    for (const auto& q : rows) out.push_back(q.r);
    return out;
}

// stages[k] has variables 1..k eliminated; nothing if infeasible.
std::optional<std::vector<std::vector<Row>>> project(const Phi0System& s) {
    auto cur = tidy(rows_of(s));
    if (!cur) return std::nullopt;
    std::vector<std::vector<Row>> stages{strip(*cur)};
    for (std::size_t k = 1; k <= s.m; ++k) {
        cur = eliminate(*cur, k);
        if (!cur) return std::nullopt;
        stages.push_back(strip(*cur));
    }
    return stages;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

struct Search {
    const std::vector<std::vector<Row>>& stages;
    std::size_t m;
    unsigned long cap;
    unsigned long nodes = 0;
    std::vector<Integer> x;  // x[1..m]

    // Assigns x_k given x_{k+1..m}; rows of stages[k-1] involve x_k..x_m.
    bool assign(std::size_t k) {
        if (k == 0) return true;
        std::optional<Integer> lo, hi;
        for (const auto& r : stages[k - 1]) {
            Integer rest = r[0];
            for (std::size_t j = k + 1; j <= m; ++j) rest += r[j] * x[j];
            const Integer& a = r[k];
            if (sgn(a) == 0) {
                if (sgn(rest) > 0) return false;
                continue;
            }
            if (sgn(a) > 0) {
                Integer u = floor_div(-rest, a);
                if (!hi || u < *hi) hi = u;
            } else {
                Integer l = ceil_div(rest, -a);
                if (!lo || l > *lo) lo = l;
            }
        }
        if (lo && hi && *lo > *hi) return false;
        Integer start = lo && hi ? floor_div(*lo + *hi, 2) : lo ? *lo : hi ? *hi : Integer(0);
        // Alternate around start within [lo, hi].
        for (unsigned long step = 0;; ++step) {
            bool any = false;
            for (int side = 0; side < 2; ++side) {
                if (step == 0 && side == 1) continue;
                Integer v = start;
                if (side == 0)
                    v += step;
                else
                    v -= step;
                if ((lo && v < *lo) || (hi && v > *hi)) continue;
                any = true;
                if (++nodes > cap) return false;
                x[k] = v;
                if (assign(k - 1)) return true;
                if (nodes > cap) return false;
            }
            if (!any) return false;
        }
    }
};

unsigned lambda_negative_at(const std::vector<Rational>& lam, bool& found) {
    for (std::size_t j = 0; j < lam.size(); ++j)
        if (sgn(lam[j]) < 0) {
            found = true;
            return static_cast<unsigned>(j);
        }
    found = false;
    return 0;
}

// floor(pi / Arg z) for an upper half-plane root: the least k with Im z^(k+1) < 0.
unsigned pi_over_arg(const RootBox& z0) {
    RootBox z = z0;
    std::optional<std::optional<unsigned>> order;  // order of z / conj(z), computed lazily
    for (unsigned k = 1;; ++k) {
        if (k > 100000) throw std::logic_error("complex_lower_bound: argument too small");
        for (int it = 0;; ++it) {
            CBox p = z.box;
            for (unsigned i = 1; i < k; ++i) p = (p * z.box).rounded(64 + 4 * k);
            if (sgn(p.im.hi) < 0) return k - 1;
            if (sgn(p.im.lo) > 0) break;
            if (!order) order = unity_order(quotient_root(z, z.conj()));
            if (*order && k % **order == 0) break;
            if (it > kRefineCap) throw std::logic_error("complex_lower_bound: refinement cap exhausted");
            z = z.refined();
        }
    }
}

}  // namespace

bool Phi0System::satisfied_by(const std::vector<Integer>& b) const {
    if (b.size() != m) throw std::invalid_argument("Phi0System: wrong vector length");
    for (const auto& r : matrix) {
        Integer s = r[0];
        for (std::size_t j = 0; j < m; ++j) s += r[j + 1] * b[j];
        if (sgn(s) > 0) return false;
    }
    return true;
}

Phi0System build_phi0_system(const IntPoly& f, unsigned m) {
    if (f.is_zero() || sgn(f.lc()) <= 0) throw std::invalid_argument("build_phi0_system: lc(f) must be positive");
    const auto n = static_cast<long>(f.degree());
    Phi0System s;
    s.m = m;
    for (long k = 0; k < static_cast<long>(m) + n; ++k) {
        Row r(m + 1);
        for (long j = 0; j <= static_cast<long>(m); ++j) {
            long i = n - 1 - k + j;
            if (i >= 0 && i <= n) r[static_cast<std::size_t>(j)] = f[static_cast<std::size_t>(i)];
        }
        s.matrix.push_back(std::move(r));
    }
    return s;
}

bool feasible_rational(const Phi0System& s) { return project(s).has_value(); }

IntegerPoint find_integer_point(const Phi0System& s, unsigned long node_cap) {
    IntegerPoint out;
    auto stages = project(s);
    if (!stages) return out;
    Search search{*stages, s.m, node_cap, 0, std::vector<Integer>(s.m + 1)};
    if (search.assign(s.m)) {
        std::vector<Integer> b(search.x.begin() + 1, search.x.end());
        if (!s.satisfied_by(b)) throw std::logic_error("find_integer_point: point violates the system");
        out.b = std::move(b);
    } else {
        out.capped = search.nodes > node_cap;
    }
    return out;
}

std::optional<Witness> find_witness(const IntPoly& f, unsigned m_max, unsigned long node_cap) {
    if (f.is_zero() || sgn(f.lc()) <= 0 || sgn(f.trailing_constant()) == 0)
        throw std::invalid_argument("find_witness: need lc(f) > 0 and f(0) != 0");
    unsigned start = 0;
    if (auto sb = series_lower_bound(f); sb.conclusive) start = sb.bound;
    bool nonreal = false;
    for (const auto& b : isolate_complex_roots(f))
        if (!b.real) nonreal = true;
    if (nonreal) start = std::max(start, complex_lower_bound(f));
    Witness w;
    for (unsigned m = start; m <= m_max; ++m) {
        Phi0System s = build_phi0_system(f, m);
        IntegerPoint p = find_integer_point(s, node_cap);
        if (!p.b) {
            if (p.capped) w.open_degrees.push_back(m);
            continue;
        }
        std::vector<Integer> c(m + 1);
        c[m] = 1;
        for (unsigned j = 0; j < m; ++j) c[m - 1 - j] = (*p.b)[j];
        w.g = IntPoly(std::move(c));
        w.m_min = m;
        if (!in_phi0(f * w.g)) throw std::logic_error("find_witness: product is not in Phi0");
        return w;
    }
    return std::nullopt;
}

SeriesBound series_lower_bound(const IntPoly& f, unsigned horizon) {
    if (f.is_zero() || sgn(f.lc()) <= 0 || sgn(f.trailing_constant()) == 0)
        throw std::invalid_argument("series_lower_bound: need lc(f) > 0 and f(0) != 0");
    if (horizon == 0) horizon = 4 * static_cast<unsigned>(f.degree() * f.degree());
    bool found = false;
    unsigned j = lambda_negative_at(power_series_inverse(f, horizon), found);
    return {found ? j : 0, found};
}

DeltaTrace delta_trace(const IntPoly& f) {
    if (f.degree() != 2 || sgn(f[2]) <= 0 || f[1] * f[1] >= 4 * f[0] * f[2] || sgn(f[1]) >= 0)
        throw std::invalid_argument("delta_trace: need a2 > 0, a1 < 0 and negative discriminant");
    const Rational two_a = Rational(-f[1]) / f[2];  // 2a
    const Rational r2 = Rational(f[0]) / f[2];      // a^2 + b^2
    DeltaTrace t;
    t.values.push_back(-two_a);
    while (sgn(t.values.back()) < 0) {
        if (t.values.size() > 100000) throw std::logic_error("delta_trace: no terminal index");
        t.values.push_back(-two_a - r2 / t.values.back());
    }
    t.terminal = t.values.size();
    return t;
}

unsigned quadratic_min_degree(const IntPoly& f) {
    if (f.degree() != 2 || sgn(f[2]) <= 0 || f[1] * f[1] >= 4 * f[0] * f[2])
        throw std::invalid_argument("quadratic_min_degree: need a2 > 0 and negative discriminant");
    if (sgn(f[1]) > 0) return 1;
    if (sgn(f[1]) == 0) return 2;
    DeltaTrace t = delta_trace(f);
    const auto m0 = static_cast<unsigned>(t.terminal);
    return sgn(t.values.back()) > 0 ? m0 : m0 + 1;
}

unsigned complex_lower_bound(const IntPoly& f) {
    if (f.is_zero() || sgn(f.trailing_constant()) == 0) throw std::invalid_argument("complex_lower_bound: f(0) must be nonzero");
    const long n = f.degree();
    bool any = false;
    long best = 0;
    for (const auto& b : isolate_complex_roots(f)) {
        if (!b.upper()) continue;
        any = true;
        best = std::max(best, static_cast<long>(pi_over_arg(b)) - n + 2);
    }
    if (!any) throw std::invalid_argument("complex_lower_bound: all roots are real");
    return static_cast<unsigned>(best);
}

}  // namespace fdgb
