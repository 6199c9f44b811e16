#include "fdgb/zx_ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "fdgb/ip_search.hpp"
#include "fdgb/phi.hpp"
#include "fdgb/real_roots.hpp"

namespace fdgb {

namespace {

IntPoly positive_lc(IntPoly p) { return !p.is_zero() && sgn(p.lc()) < 0 ? -p : p; }

// Reduces the leading term while some leading term divides it.
IntPoly top_reduce(IntPoly p, const std::vector<IntPoly>& G) {
    while (!p.is_zero()) {
        bool hit = false;
        for (const auto& g : G) {
            if (g.degree() > p.degree() || !mpz_divisible_p(p.lc().get_mpz_t(), g.lc().get_mpz_t())) continue;
            Integer q = p.lc() / g.lc();
            p -= IntPoly::monomial(q, static_cast<std::size_t>(p.degree() - g.degree())) * g;
            hit = true;
            break;
        }
        if (!hit) break;
    }
    return positive_lc(std::move(p));
}

IntPoly floor_reduce(IntPoly p, const std::vector<IntPoly>& B, int top) {
    for (int e = top; e >= 0; --e) {
        const Integer a = p[static_cast<std::size_t>(e)];
        if (sgn(a) == 0) continue;
        const IntPoly* g = nullptr;
        for (const auto& b : B)
            if (b.degree() <= e) g = &b;
        if (!g) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), g->lc().get_mpz_t());
        if (sgn(q) != 0) p -= IntPoly::monomial(q, static_cast<std::size_t>(e - g->degree())) * *g;
    }
    return p;
}

IntPoly shift(const IntPoly& p, int k) { return IntPoly::monomial(1, static_cast<std::size_t>(k)) * p; }

}  // namespace

ZxGB zx_groebner(const std::vector<IntPoly>& gens) {
    std::vector<IntPoly> G;
    for (const auto& g : gens)
        if (!g.is_zero()) G.push_back(positive_lc(g));
    if (G.empty()) throw std::invalid_argument("zx_groebner: all generators are zero");

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        const IntPoly a = G[i], b = G[j];
        const int d = std::max(a.degree(), b.degree());
        Integer l;
        mpz_lcm(l.get_mpz_t(), a.lc().get_mpz_t(), b.lc().get_mpz_t());
        std::vector<IntPoly> cands{shift(a, d - a.degree()) * Integer(l / a.lc()) -
                                   shift(b, d - b.degree()) * Integer(l / b.lc())};
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.lc().get_mpz_t(), b.lc().get_mpz_t());
        if (g != a.lc() && g != b.lc()) cands.push_back(shift(a, d - a.degree()) * s + shift(b, d - b.degree()) * t);
        for (auto& c : cands) {
            IntPoly r = top_reduce(std::move(c), G);
            if (r.is_zero()) continue;
            G.push_back(std::move(r));
            for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
        }
    }

    std::sort(G.begin(), G.end(), [](const IntPoly& a, const IntPoly& b) {
        return a.degree() != b.degree() ? a.degree() < b.degree() : a.lc() < b.lc();
    });
    std::vector<IntPoly> kept;
    for (auto& g : G) {
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](const IntPoly& k) {
            return k.degree() <= g.degree() && mpz_divisible_p(g.lc().get_mpz_t(), k.lc().get_mpz_t());
        });
        if (!redundant) kept.push_back(std::move(g));
    }
    for (std::size_t k = 0; k < kept.size(); ++k) {
        std::vector<IntPoly> lower(kept.begin(), kept.begin() + static_cast<long>(k));
        kept[k] = floor_reduce(kept[k], lower, kept[k].degree() - 1);
    }
    return ZxGB{std::move(kept)};
}

IntPoly zx_reduce(const IntPoly& p, const ZxGB& basis) {
    if (p.is_zero()) return p;
    return floor_reduce(p, basis.elements, p.degree());
}

const char* to_string(CriterionKind k) {
    switch (k) {
        case CriterionKind::Finite: return "Finite";
        case CriterionKind::Infinite: return "Infinite";
        case CriterionKind::Unknown: return "Unknown";
    }
    return "?";
}

std::optional<IntPoly> phi0_in_ideal(const ZxGB& basis, unsigned d, unsigned long node_cap) {
    const auto& E = basis.elements;
    const IntPoly& gt = basis.last();
    if (static_cast<int>(d) < gt.degree()) return std::nullopt;
    const IntPoly top = shift(gt, static_cast<int>(d) - gt.degree());
    // b_e multiplies x^(e - d_i) g_i with d_i the largest degree <= e.
    std::vector<IntPoly> cols;
    for (int e = static_cast<int>(d) - 1; e >= E.front().degree(); --e) {
        const IntPoly* g = nullptr;
        for (const auto& b : E)
            if (b.degree() <= e) g = &b;
        cols.push_back(shift(*g, e - g->degree()));
    }
    Phi0System s;
    s.m = static_cast<unsigned>(cols.size());
    for (unsigned k = 0; k < d; ++k) {
        std::vector<Integer> row{top[k]};
        for (const auto& c : cols) row.push_back(c[k]);
        s.matrix.push_back(std::move(row));
    }
    IntegerPoint pt = find_integer_point(s, node_cap);
    if (!pt.b) return std::nullopt;
    IntPoly h = top;
    for (std::size_t i = 0; i < cols.size(); ++i) h += cols[i] * (*pt.b)[i];
    if (!in_phi0(h) || h.lc() != gt.lc() || !zx_reduce(h, basis).is_zero())
        throw std::logic_error("phi0_in_ideal: search returned an invalid point");
    return h;
}

CriterionResult finite_sgb_criterion(const ZxGB& basis, unsigned degree_cap) {
    if (basis.elements.empty()) throw std::invalid_argument("finite_sgb_criterion: empty basis");
    CriterionResult r;
    const IntPoly& g1 = basis.elements.front();
    const IntPoly& gt = basis.last();

    if (g1.degree() > 0 && membership_phi1(g1.primitive()).kind == Phi1Kind::No) {
        r.kind = CriterionKind::Infinite;
        r.rule = "a";
        return r;
    }

    auto finite = [&](IntPoly h, const char* rule) {
        if (!in_phi0(h) || h.lc() != gt.lc() || !zx_reduce(h, basis).is_zero())
            throw std::logic_error("finite_sgb_criterion: invalid witness");
        r.kind = CriterionKind::Finite;
        r.witness = std::move(h);
        r.rule = rule;
        return r;
    };

    auto vt = membership_phi1(gt);
    if (vt.kind == Phi1Kind::Yes || vt.kind == Phi1Kind::InPhi0) return finite(gt * *vt.witness, "b");

    // Every element of the ideal is a multiple of the primitive part of g1, so
    // g1 is the candidate without positive roots.
    if (g1.degree() > 0 && count_positive_roots(g1) == 0) {
        const std::size_t m1 = g1.x_valuation();
        const IntPoly h1 = shift_down(g1, m1);
        unsigned N = minimal_positivity_exponent(h1);
        if (h1.degree() + static_cast<int>(N) <= gt.degree()) N = static_cast<unsigned>(gt.degree() - h1.degree() + 1);
        const IntPoly h2 = pow(IntPoly{1, 1}, N) * h1;
        const IntPoly lifted = shift(gt, h2.degree() - gt.degree() + 1);
        Integer M = 1;
        for (int i = 0; i <= h2.degree(); ++i) {
            Integer q;
            mpz_cdiv_q(q.get_mpz_t(), lifted[static_cast<std::size_t>(i)].get_mpz_t(), h2[static_cast<std::size_t>(i)].get_mpz_t());
            if (q > M) M = q;
        }
        return finite(shift(lifted - h2 * M, static_cast<int>(m1)), "c");
    }

    for (unsigned d = static_cast<unsigned>(gt.degree()); d <= degree_cap; ++d)
        if (auto h = phi0_in_ideal(basis, d)) return finite(std::move(*h), "d");

    r.kind = CriterionKind::Unknown;
    r.rule = "e";
    r.bound_used = degree_cap;
    return r;
}

BinomialBasis multi_finite_gb(const ZxGB& basis, const IntPoly& witness) {
    if (basis.elements.empty()) throw std::invalid_argument("multi_finite_gb: empty basis");
    if (!in_phi0(witness) || witness.lc() != basis.last().lc() || !zx_reduce(witness, basis).is_zero())
        throw std::invalid_argument("multi_finite_gb: witness must lie in the ideal and in Phi0 with lc(g_t)");
    const auto D = static_cast<unsigned>(witness.degree());
    BinomialBasis b = basis_from_generators(basis.elements, D, Saturation::AllVariables);
    b.certified = certify_sigma_gb(b, basis.elements, basis.last().lc());
    return b;
}

}  // namespace fdgb
