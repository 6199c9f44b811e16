#include "fdgb/sigma_gb.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <stdexcept>

#include "fdgb/ip_search.hpp"

namespace fdgb {

namespace {

using Mono = TruncMonomial;

bool divides(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mono lcm(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool coprime(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

long total(const Mono& a) {
    long s = 0;
    for (long e : a) s += e;
    return s;
}

// m * trail / lead; lead must divide m.
void rewrite(Mono& m, const TruncBinomial& g) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += g.trail[i] - g.lead[i];
}

Mono normal_form(Mono m, const std::vector<TruncBinomial>& G) {
    for (;;) {
        bool hit = false;
        for (const auto& g : G)
            if (divides(g.lead, m)) {
                rewrite(m, g);
                hit = true;
                break;
            }
        if (!hit) return m;
    }
}

std::optional<TruncBinomial> orient(Mono u, Mono v) {
    int c = lex_compare(u, v);
    if (c == 0) return std::nullopt;
    if (c < 0) std::swap(u, v);
    return TruncBinomial{std::move(u), std::move(v)};
}

std::optional<TruncBinomial> reduce(const TruncBinomial& b, const std::vector<TruncBinomial>& G) {
    return orient(normal_form(b.lead, G), normal_form(b.trail, G));
}

// S-binomial of a and b.
TruncBinomial s_pair(const TruncBinomial& a, const TruncBinomial& b, const Mono& l) {
    Mono u = a.trail, v = b.trail;
    for (std::size_t i = 0; i < l.size(); ++i) {
        u[i] += l[i] - a.lead[i];
        v[i] += l[i] - b.lead[i];
    }
    return {u, v};
}

std::vector<TruncBinomial> reduce_basis(std::vector<TruncBinomial> G) {
    std::sort(G.begin(), G.end(), [](const auto& a, const auto& b) { return lex_compare(a.lead, b.lead) < 0; });
    std::vector<TruncBinomial> kept;
    for (auto& g : G) {
        bool redundant = false;
        for (const auto& k : kept)
            if (divides(k.lead, g.lead)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(std::move(g));
    }
    for (auto& g : kept) g.trail = normal_form(g.trail, kept);
    return kept;
}

Mono to_mono(const IntPoly& p, std::size_t len) {
    Mono m(len, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i >= len || sgn(p[i]) < 0 || !p[i].fits_slong_p())
            throw std::invalid_argument("to_mono: exponent out of range");
        m[i] = p[i].get_si();
    }
    return m;
}

IntPoly to_poly(const Mono& m, std::size_t len) {
    std::vector<Integer> c(len);
    for (std::size_t i = 0; i < len; ++i) c[i] = m[i];
    return IntPoly(std::move(c));
}

// Shifts y_i -> y_{i+j} inside the first len slots; nothing when out of range.
std::optional<Mono> shifted(const Mono& m, std::size_t j, std::size_t len) {
    Mono r(m.size(), 0);
    for (std::size_t i = 0; i < len; ++i) {
        if (m[i] == 0) continue;
        if (i + j >= len) return std::nullopt;
        r[i + j] = m[i];
    }
    for (std::size_t i = len; i < m.size(); ++i) r[i] = m[i];
    return r;
}

bool sigma_divides(const Mono& a, const Mono& b, std::size_t len) {
    for (std::size_t j = 0; j < len; ++j) {
        auto s = shifted(a, j, len);
        if (!s) return false;
        if (divides(*s, b)) return true;
    }
    return false;
}

// Normal form under all in-range shifts of G.
Mono sigma_normal_form(Mono m, const std::vector<TruncBinomial>& G, std::size_t len) {
    for (;;) {
        bool hit = false;
        for (const auto& g : G) {
            for (std::size_t j = 0; j < len && !hit; ++j) {
                auto l = shifted(g.lead, j, len);
                if (!l) break;
                if (!divides(*l, m)) continue;
                auto t = shifted(g.trail, j, len);
                for (std::size_t i = 0; i < m.size(); ++i) m[i] += (*t)[i] - (*l)[i];
                hit = true;
            }
            if (hit) break;
        }
        if (!hit) return m;
    }
}

DiffBinomial to_diff(const TruncBinomial& b, std::size_t len) { return {to_poly(b.lead, len), to_poly(b.trail, len)}; }

std::vector<TruncBinomial> expanded(const BinomialBasis& basis) {
    const std::size_t len = basis.D + 1;
    std::vector<TruncBinomial> out;
    for (const auto& e : basis.elements) {
        Mono l = to_mono(e.plus, len + 1), t = to_mono(e.minus, len + 1);
        for (std::size_t j = 0; j < len; ++j) {
            auto sl = shifted(l, j, len), st = shifted(t, j, len);
            if (!sl || !st) break;
            out.push_back({*sl, *st});
        }
    }
    return out;
}

int lex_compare_poly(const IntPoly& a, const IntPoly& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = n; i-- > 0;) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

bool poly_divides(const IntPoly& a, const IntPoly& b, std::size_t j) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i + j]) return false;
    return true;
}

IntPoly poly_normal_form(IntPoly u, const BinomialBasis& basis) {
    for (;;) {
        bool hit = false;
        for (const auto& e : basis.elements) {
            if (e.plus.degree() > u.degree()) continue;
            const auto top = static_cast<std::size_t>(u.degree() - e.plus.degree());
            for (std::size_t j = 0; j <= top; ++j)
                if (poly_divides(e.plus, u, j)) {
                    u += IntPoly::monomial(1, j) * (e.minus - e.plus);
                    hit = true;
                    break;
                }
            if (hit) break;
        }
        if (!hit) return u;
    }
}

IntPoly min_poly(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> c(std::min(a.size(), b.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::min(a[i], b[i]);
    return IntPoly(std::move(c));
}

std::vector<TruncBinomial> generators_of(const std::vector<IntPoly>& fs, unsigned D, Saturation sat) {
    if (fs.empty()) throw std::invalid_argument("truncated_generators: no generators");
    const std::size_t len = D + 1;
    std::vector<TruncBinomial> gens;
    Mono w(len + 1, 0);
    for (const auto& f : fs) {
        if (f.is_zero() || sgn(f.lc()) <= 0) throw std::invalid_argument("truncated_generators: lc(f) must be positive");
        const auto n = static_cast<unsigned>(f.degree());
        if (D < n) throw std::invalid_argument("truncated_generators: D below deg f");
        const DiffBinomial b = to_binomial(f);
        IntPoly geo;
        for (unsigned i = 0; i + n <= D; ++i) {
            IntPoly s = IntPoly::monomial(1, i);
            gens.push_back({to_mono(s * b.plus, len + 1), to_mono(s * b.minus, len + 1)});
            geo += s;
        }
        IntPoly J = b.plus - IntPoly::monomial(f.lc(), n);
        Mono j = to_mono(J * geo, len + 1);
        for (std::size_t i = 0; i < len; ++i) w[i] += j[i];
    }
    if (sat == Saturation::AllVariables) std::fill(w.begin(), w.end(), 1);
    w[len] = 1;
    gens.push_back({w, Mono(len + 1, 0)});
    return gens;
}

}  // namespace

int lex_compare(const TruncMonomial& a, const TruncMonomial& b) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

DiffBinomial to_binomial(const IntPoly& f) {
    std::vector<Integer> p(f.size()), m(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (sgn(f[i]) > 0) p[i] = f[i];
        if (sgn(f[i]) < 0) m[i] = -f[i];
    }
    return {IntPoly(std::move(p)), IntPoly(std::move(m))};
}

std::vector<TruncBinomial> truncated_generators(const IntPoly& f, unsigned D, Saturation sat) {
    return generators_of({f}, D, sat);
}

std::vector<TruncBinomial> buchberger_binomial(std::vector<TruncBinomial> gens, bool eliminate_last) {
    std::vector<TruncBinomial> G;
    for (const auto& g : gens) {
        if (g.lead.size() != g.trail.size()) throw std::invalid_argument("buchberger_binomial: ragged monomials");
        if (auto o = orient(g.lead, g.trail)) G.push_back(*o);
    }

    // Pending pairs keyed by (deg lcm, lcm, i, j).
    using Key = std::tuple<long, std::vector<long>, std::size_t, std::size_t>;
    auto key_less = [](const Key& a, const Key& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        int c = lex_compare(std::get<1>(a), std::get<1>(b));
        if (c != 0) return c < 0;
        return std::make_pair(std::get<2>(a), std::get<3>(a)) < std::make_pair(std::get<2>(b), std::get<3>(b));
    };
    std::set<Key, decltype(key_less)> queue(key_less);
    std::set<std::pair<std::size_t, std::size_t>> done;
    std::vector<bool> alive(G.size(), true);
    auto add_pair = [&](std::size_t i, std::size_t j) {
        Mono l = lcm(G[i].lead, G[j].lead);
        long d = total(l);
        queue.insert({d, std::move(l), i, j});
    };
    for (std::size_t j = 0; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) add_pair(i, j);

    while (!queue.empty()) {
        auto [d, l, i, j] = *queue.begin();
        queue.erase(queue.begin());
        done.insert({i, j});
        if (coprime(G[i].lead, G[j].lead)) continue;
        bool chain = false;
        for (std::size_t k = 0; k < G.size() && !chain; ++k) {
            if (k == i || k == j || !divides(G[k].lead, l)) continue;
            if (done.count({std::min(i, k), std::max(i, k)}) && done.count({std::min(j, k), std::max(j, k)}))
                chain = true;
        }
        if (chain) continue;
        auto h = reduce(s_pair(G[i], G[j], l), G);
        if (!h) continue;
        G.push_back(std::move(*h));
        alive.push_back(true);
        const std::size_t n = G.size() - 1;
        for (std::size_t k = 0; k < n; ++k)
            if (alive[k]) {
                add_pair(k, n);
                if (divides(G[n].lead, G[k].lead)) alive[k] = false;
            }
    }

    G = reduce_basis(std::move(G));
    if (eliminate_last) {
        std::erase_if(G, [](const TruncBinomial& g) { return g.lead.back() != 0; });
    }
    return G;
}

BinomialBasis basis_from_generators(const std::vector<IntPoly>& gens, unsigned D, Saturation sat) {
    const std::size_t len = D + 1;
    auto G = buchberger_binomial(generators_of(gens, D, sat));
    // Interreduce under shifts: ascending leads, so only smaller leads can cover.
    std::vector<TruncBinomial> kept;
    for (auto& g : G) {
        bool covered = false;
        for (const auto& k : kept)
            if (sigma_divides(k.lead, g.lead, len)) {
                covered = true;
                break;
            }
        if (covered) continue;
        g.trail = sigma_normal_form(g.trail, kept, len);
        kept.push_back(std::move(g));
    }
    BinomialBasis out;
    out.D = D;
    for (const auto& k : kept) out.elements.push_back(to_diff(k, len));
    return out;
}

BinomialBasis gb_truncated(const IntPoly& f, unsigned D, Saturation sat) {
    BinomialBasis out = basis_from_generators({f}, D, sat);
    out.certified = certify_sigma_gb(out, f);
    return out;
}

bool certify_sigma_gb(const BinomialBasis& basis, const IntPoly& f) {
    if (f.is_zero() || sgn(f.lc()) <= 0) throw std::invalid_argument("certify_sigma_gb: lc(f) must be positive");
    return certify_sigma_gb(basis, std::vector<IntPoly>{f}, f.lc());
}

bool certify_sigma_gb(const BinomialBasis& basis, const std::vector<IntPoly>& gens, const Integer& lc) {
    const std::size_t len = basis.D + 1;
    std::vector<TruncBinomial> E = expanded(basis);
    for (std::size_t j = 0; j < E.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            if (coprime(E[i].lead, E[j].lead)) continue;
            if (reduce(s_pair(E[i], E[j], lcm(E[i].lead, E[j].lead)), E)) return false;
        }
    for (const auto& f : gens) {
        if (f.is_zero() || sgn(f.lc()) <= 0) throw std::invalid_argument("certify_sigma_gb: lc(f) must be positive");
        if (static_cast<unsigned>(f.degree()) > basis.D) return false;
        const DiffBinomial b = to_binomial(f);
        for (unsigned i = 0; i + static_cast<unsigned>(f.degree()) <= basis.D; ++i) {
            IntPoly s = IntPoly::monomial(1, i);
            if (normal_form(to_mono(s * b.plus, len + 1), E) != normal_form(to_mono(s * b.minus, len + 1), E))
                return false;
        }
    }
    return std::any_of(basis.elements.begin(), basis.elements.end(), [&](const DiffBinomial& e) {
        IntPoly h = e.exponent();
        return in_phi0(h) && h.lc() == lc;
    });
}

std::optional<DiffBinomial> grem(const DiffBinomial& b, const BinomialBasis& basis) {
    IntPoly u = b.plus, v = b.minus;
    for (;;) {
        u = poly_normal_form(u, basis);
        v = poly_normal_form(v, basis);
        if (u == v) return std::nullopt;
        IntPoly c = min_poly(u, v);
        if (c.is_zero()) break;
        u -= c;
        v -= c;
    }
    if (lex_compare_poly(u, v) < 0) std::swap(u, v);
    return DiffBinomial{u, v};
}

bool ideal_membership(const IntPoly& g, const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("ideal_membership: f must be nonzero");
    return divide_exact(g, f).has_value();
}

long gap_degree(const IntPoly& u) {
    IntPoly rest = to_binomial(u).plus - IntPoly::monomial(u.lc(), static_cast<std::size_t>(u.degree()));
    if (rest.is_zero()) throw std::invalid_argument("gap_degree: positive part is a single term");
    return u.degree() - rest.degree();
}

std::vector<IntPoly> infinite_gb_stream(const IntPoly& f, unsigned k) {
    if (f.is_zero() || sgn(f.lc()) <= 0 || in_phi0(f))
        throw std::invalid_argument("infinite_gb_stream: need lc(f) > 0 and f outside Phi0");
    std::vector<IntPoly> out;
    IntPoly s = f;
    for (unsigned i = 0; i < k; ++i) {
        IntPoly rest = to_binomial(s).plus - IntPoly::monomial(s.lc(), static_cast<std::size_t>(s.degree()));
        if (rest.is_zero()) throw std::logic_error("infinite_gb_stream: element fell into Phi0");
        Integer c;
        mpz_cdiv_q(c.get_mpz_t(), rest.lc().get_mpz_t(), s.lc().get_mpz_t());
        IntPoly mult = IntPoly::monomial(1, static_cast<std::size_t>(s.degree())) -
                       IntPoly::monomial(c, static_cast<std::size_t>(rest.degree()));
        s = mult * s;
        out.push_back(s);
    }
    return out;
}

FiniteGbResult finite_gb(const IntPoly& f, unsigned conjecture_cap) {
    FiniteGbResult r;
    r.verdict = membership_phi1(f);
    const IntPoly& core = r.verdict.core;
    const auto n = static_cast<unsigned>(core.degree());
    std::optional<unsigned> D;
    switch (r.verdict.kind) {
        case Phi1Kind::InPhi0:
            D = n;
            break;
        case Phi1Kind::No:
            r.kind = GbKind::Infinite;
            return r;
        case Phi1Kind::Yes: {
            const auto via_witness = static_cast<unsigned>((core * *r.verdict.witness).degree());
            const std::string& st = r.verdict.step;
            if (st == "2")
                D = std::min(polya_exponent(core).N_f + n + 1, via_witness);
            else if (st == "4.2")
                D = *r.verdict.delta;
            else if (st == "4.3")
                D = n + *r.verdict.delta - 1;
            else if (st == "4.6")
                D = std::max(*r.verdict.delta * static_cast<unsigned>(r.verdict.fstar->degree()), via_witness);
            else
                D = via_witness;
            break;
        }
        case Phi1Kind::ConjecturalYes:
            if (auto w = find_witness(core, conjecture_cap)) D = n + w->m_min;
            break;
    }
    if (!D) {
        r.kind = GbKind::Undecided;
        return r;
    }
    r.kind = GbKind::Basis;
    r.basis = gb_truncated(core, std::max(*D, n));
    return r;
}

std::string to_string(const DiffBinomial& b) {
    auto side = [](const IntPoly& p) {
        if (p.is_zero()) return std::string("1");
        if (p == IntPoly{1}) return std::string("y");
        std::string t = to_string(p);
        std::erase(t, ' ');
        return "y^[" + t + "]";
    };
    return side(b.plus) + " - " + side(b.minus);
}

}  // namespace fdgb
