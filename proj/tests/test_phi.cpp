#include <catch_amalgamated.hpp>

#include <random>

#include "fdgb/phi.hpp"

using namespace fdgb;

namespace {

const IntPoly X2m2{-2, 0, 1};

IntPoly random_poly(std::mt19937& rng, int deg, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    std::vector<Integer> c(static_cast<std::size_t>(deg) + 1);
    for (auto& a : c) a = d(rng);
    if (sgn(c.back()) <= 0) c.back() = 1 + abs(c.back());
    if (sgn(c[0]) == 0) c[0] = 1;
    return IntPoly(std::move(c));
}

// lcm over square-free factors of resultant_power(s, delta)^e.
IntPoly fstar_oracle(const IntPoly& f, unsigned delta) {
    IntPoly out{1};
    for (const auto& s : sqfree_decompose(f).factors) out = lcm_primitive(out, pow(resultant_power(s.factor, delta), s.multiplicity));
    return out;
}

bool phi0_ll(const std::vector<long long>& p) {
    if (p.back() <= 0) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] > 0) return false;
    return true;
}

// Exhaustive search for a monic g of degree <= 4, coefficients in [-20, 20].
bool small_witness_exists(const IntPoly& f) {
    std::vector<long long> fc;
    for (const auto& c : f.coeffs()) fc.push_back(c.get_si());
    std::vector<long long> g, prod;
    for (int d = 0; d <= 4; ++d) {
        std::vector<int> b(static_cast<std::size_t>(d), -20);
        for (;;) {
            g.assign(b.begin(), b.end());
            g.push_back(1);
            prod.assign(fc.size() + g.size() - 1, 0);
            for (std::size_t i = 0; i < fc.size(); ++i)
                for (std::size_t j = 0; j < g.size(); ++j) prod[i + j] += fc[i] * g[j];
            if (phi0_ll(prod)) return true;
            std::size_t k = 0;
            while (k < b.size() && b[k] == 20) b[k++] = -20;
            if (k == b.size()) break;
            ++b[k];
        }
    }
    return false;
}

}  // namespace

TEST_CASE("in_phi0 and normalize examples") {
    CHECK(in_phi0(IntPoly{-1, 0, 0, 1}));
    CHECK_FALSE(in_phi0(IntPoly{1, 1, 1}));
    CHECK(in_phi0(IntPoly{-8, 0, 0, 0, 0, -2, 1}));

    auto a = normalize(IntPoly{0, 0, -6, 6});
    CHECK(a.content == 6);
    CHECK(a.shift == 2);
    CHECK(a.core == IntPoly{-1, 1});
    auto b = normalize(IntPoly{1, 1, 1});
    CHECK(b.content == 1);
    CHECK(b.shift == 0);
    CHECK(b.core == IntPoly{1, 1, 1});
    auto c = normalize(IntPoly{0, 0, -4, 0, 2});
    CHECK(c.content == 2);
    CHECK(c.shift == 2);
    CHECK(c.core == X2m2);
    CHECK_THROWS(normalize(IntPoly{}));
    CHECK_THROWS(normalize(IntPoly{1, -1}));
}

TEST_CASE("compute_fstar examples") {
    CHECK(compute_fstar(X2m2 * IntPoly{1, 1}, 2) == IntPoly{-2, 1} * IntPoly{-1, 1});
    CHECK(compute_fstar(X2m2 * IntPoly{2, -2, 1}, 8) == IntPoly{-16, 1});
    IntPoly e412 = IntPoly{-1, 1} * pow(IntPoly{1, 0, 1}, 2) * IntPoly{1, 0, 0, 1};
    CHECK(compute_fstar(e412, 12) == pow(IntPoly{-1, 1}, 2));
    CHECK(compute_fstar(IntPoly{-1, 1} * IntPoly{1, 0, 1} * IntPoly{1, 0, 0, 1}, 12) == IntPoly{-1, 1});
    CHECK_THROWS(compute_fstar(IntPoly{0, 1, 1}, 2));
}

TEST_CASE("compute_fstar agrees with the resultant oracle") {
    std::mt19937 rng(5);
    for (int it = 0; it < 100; ++it) {
        IntPoly f = random_poly(rng, 1 + it % 6, 6);
        if (it % 4 == 0) f = random_poly(rng, 1 + it % 3, 4) * random_poly(rng, 1 + it % 2, 3);
        f = f.primitive();
        const unsigned delta = 1 + static_cast<unsigned>(it % 4);
        IntPoly fs = compute_fstar(f, delta);
        CHECK(fs == fstar_oracle(f, delta));
        CHECK(divide_exact(compose_power(fs, delta), f).has_value());
        if (delta == 1) CHECK(fs == f);
    }
}

TEST_CASE("minimal_delta examples") {
    auto xp = [](const IntPoly& f) {
        for (const auto& r : isolate_real_roots(f))
            if (compare(r.value, Rational(0)) > 0) return r.value;
        throw std::runtime_error("no positive root");
    };
    IntPoly f1 = X2m2 * IntPoly{1, 1};
    CHECK(minimal_delta(f1, xp(f1)) == 2u);
    IntPoly f2 = X2m2 * IntPoly{2, -2, 1};
    CHECK(minimal_delta(f2, xp(f2)) == 8u);
    IntPoly f3 = IntPoly{-5, 0, 1} * IntPoly{5, -2, 1};
    CHECK_FALSE(minimal_delta(f3, xp(f3)).has_value());
}

TEST_CASE("membership_phi1 examples") {
    auto v1 = membership_phi1(IntPoly{1, 1, 1});
    CHECK(v1.kind == Phi1Kind::Yes);
    REQUIRE(v1.witness);
    CHECK(*v1.witness == IntPoly{-1, 1});

    auto v2 = membership_phi1(IntPoly{1, -2, 1});
    CHECK(v2.kind == Phi1Kind::No);
    CHECK(v2.reason == NoReason::TwoPositiveRoots);

    IntPoly f3 = IntPoly{-1, 1} * IntPoly{1, 0, 1} * IntPoly{1, 0, 0, 1};
    auto v3 = membership_phi1(f3);
    CHECK(v3.kind == Phi1Kind::Yes);
    CHECK(v3.delta == 12u);
    CHECK(v3.witness == exact_quotient(IntPoly::monomial(1, 12) - IntPoly{1}, f3));

    auto v4 = membership_phi1(X2m2 * IntPoly{1, 1});
    CHECK(v4.kind == Phi1Kind::No);
    CHECK(v4.reason == NoReason::FstarFails);
    CHECK(v4.delta == 2u);

    IntPoly f5 = X2m2 * IntPoly{2, -2, 1};
    auto v5 = membership_phi1(f5);
    CHECK(v5.kind == Phi1Kind::Yes);
    CHECK(v5.delta == 8u);
    CHECK(v5.fstar == IntPoly{-16, 1});
    CHECK(f5 * *v5.witness == IntPoly::monomial(1, 8) - IntPoly{16});

    auto v6 = membership_phi1(IntPoly{-1, 1} * pow(IntPoly{1, 0, 1}, 2) * IntPoly{1, 0, 0, 1});
    CHECK(v6.kind == Phi1Kind::No);

    auto v7 = membership_phi1(IntPoly{-5, 0, 1} * IntPoly{5, -2, 1});
    CHECK(v7.kind == Phi1Kind::No);
    CHECK(v7.reason == NoReason::NonUnityRatio);

    auto v8 = membership_phi1(IntPoly{-2, 1, -1, 1});
    CHECK(v8.kind == Phi1Kind::ConjecturalYes);
    CHECK_FALSE(v8.witness.has_value());
    CHECK(v8.step == "4.7");

    CHECK(membership_phi1(IntPoly{-1, 1}).kind == Phi1Kind::InPhi0);
    CHECK_THROWS(membership_phi1(IntPoly{1, 0, 1, -2}));
}

TEST_CASE("membership_phi1 step coverage") {
    // root below one
    auto a = membership_phi1(IntPoly{-1, 3, 1} * IntPoly{1, 1});
    CHECK(a.reason == NoReason::PositiveRootBelowOne);
    // root outside the circle
    auto b = membership_phi1(IntPoly{-6, 1, 1});
    CHECK(b.reason == NoReason::RootOutsideCircle);
    // x+ = 1 with the other roots strictly inside
    IntPoly c = IntPoly{-1, 1} * IntPoly{1, 0, 2};
    auto vc = membership_phi1(c);
    CHECK(vc.step == "4.3");
    CHECK(vc.kind == Phi1Kind::Yes);
    CHECK(vc.delta == 2u);
    CHECK(membership_phi1(IntPoly{-3, 0, 2}).kind == Phi1Kind::InPhi0);
    // 2x^2 + x - 3 = (x - 1)(2x + 3): root -3/2 outside
    CHECK(membership_phi1(IntPoly{-3, 1, 2}).reason == NoReason::RootOutsideCircle);
    // x+ = 1 with roots of modulus sqrt 3 outside
    CHECK(membership_phi1(IntPoly{-1, 1} * IntPoly{1, 0, 2} * IntPoly{3, 0, 1}).reason == NoReason::RootOutsideCircle);
}

TEST_CASE("lc mismatch is reported") {
    // circle root -sqrt 2, inner root -1/2; f* = (x - 2)(4x - 1)
    auto v = membership_phi1(X2m2 * IntPoly{1, 2});
    CHECK(v.kind == Phi1Kind::No);
    CHECK(v.reason == NoReason::LcMismatch);
    CHECK(v.fstar == IntPoly{-2, 1} * IntPoly{-1, 4});

    // roots -1 +- i on the circle of radius sqrt 2; f* = x - 16
    auto w = membership_phi1(X2m2 * IntPoly{2, 2, 1});
    CHECK(w.kind == Phi1Kind::Yes);
    CHECK(w.delta == 8u);
    CHECK(X2m2 * IntPoly{2, 2, 1} * *w.witness == IntPoly::monomial(1, 8) - IntPoly{16});
}

TEST_CASE("invariance under content and x-power") {
    std::mt19937 rng(11);
    for (int it = 0; it < 30; ++it) {
        IntPoly f = random_poly(rng, 1 + it % 4, 4).primitive();
        auto v = membership_phi1(f);
        auto w = membership_phi1(Integer(3) * IntPoly::monomial(1, 2) * f);
        CHECK(v.kind == w.kind);
        if (v.witness) CHECK(in_phi0(f * *v.witness));
    }
}

TEST_CASE("Phi0 members have one simple positive root and nothing outside") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> neg(0, 6);
    int done = 0;
    for (int it = 0; done < 200; ++it) {
        IntPoly h;
        if (it % 2 == 0) {
            std::vector<Integer> c(static_cast<std::size_t>(1 + it % 7) + 1);
            for (auto& a : c) a = -neg(rng);
            c.back() = 1 + neg(rng);
            if (sgn(c[0]) == 0) c[0] = -1;
            h = IntPoly(std::move(c));
        } else {
            IntPoly f = random_poly(rng, 1 + it % 3, 4).primitive();
            auto v = membership_phi1(f);
            if (!v.witness) continue;
            h = v.core * *v.witness;
            h = shift_down(h, h.x_valuation());
            if (h.degree() > 10) continue;
        }
        if (!in_phi0(h)) continue;
        ++done;
        REQUIRE(count_positive_roots(h) == 1);
        RealAlgebraic xp;
        for (const auto& r : isolate_real_roots(h))
            if (compare(r.value, Rational(0)) > 0) {
                CHECK(r.multiplicity == 1);
                xp = r.value;
            }
        CHECK_FALSE(has_root_outside(h, xp));
    }
}

TEST_CASE("No verdicts survive a bounded witness search") {
    std::mt19937 rng(19);
    int done = 0;
    for (int it = 0; done < 20 && it < 2000; ++it) {
        IntPoly f = random_poly(rng, 2 + it % 2, 4).primitive();
        auto v = membership_phi1(f);
        if (v.kind != Phi1Kind::No) continue;
        if (v.reason != NoReason::TwoPositiveRoots && v.reason != NoReason::PositiveRootBelowOne) continue;
        ++done;
        CHECK_FALSE(small_witness_exists(v.core));
    }
    CHECK(done == 20);
}

TEST_CASE("Polya exponent examples") {
    auto p = polya_exponent(IntPoly{2, -2, 1});
    CHECK(p.lambda_lower == Rational(1, 5));
    CHECK(p.lambda_exact);
    CHECK(p.L == 2);
    CHECK(p.N_f == 9u);
    auto q = polya_exponent(IntPoly{1, 0, 1});
    CHECK(q.lambda_lower == Rational(1, 2));
    CHECK(q.L == 1);
    CHECK(q.N_f == 1u);
    CHECK(polya_exponent(IntPoly{1, 1}).N_f == 0u);
    CHECK_THROWS(polya_exponent(IntPoly{-2, 1}));

    CHECK(minimal_positivity_exponent(IntPoly{2, -2, 1}) == 6u);
    CHECK(minimal_positivity_exponent(IntPoly{1, 0, 1}) == 1u);
    CHECK(minimal_positivity_exponent(IntPoly{1, 1}) == 0u);

    // irrational critical points: the bound is certified, not exact
    auto r = polya_exponent(IntPoly{3, -3, 0, 1});
    CHECK_FALSE(r.lambda_exact);
    CHECK(sgn(r.lambda_lower) > 0);
    CHECK(r.N_f >= minimal_positivity_exponent(IntPoly{3, -3, 0, 1}));
}

TEST_CASE("phi0 witness for polynomials without positive roots") {
    IntPoly g = phi0_witness_no_positive_roots(IntPoly{1, 1, 1});
    CHECK(g == IntPoly{1, 1, 1} * IntPoly{-3, 1});
    CHECK(in_phi0(IntPoly{1, 1, 1} * g));
    IntPoly h = phi0_witness_no_positive_roots(IntPoly{2, 1});
    CHECK(in_phi0(IntPoly{2, 1} * h));
    CHECK(h.lc() == 1);
    CHECK(phi0_witness_no_positive_roots(IntPoly{-2, 1}) == IntPoly{1});
    IntPoly k = phi0_witness_no_positive_roots(IntPoly{2, -2, 1});
    CHECK(in_phi0(IntPoly{2, -2, 1} * k));
    CHECK_THROWS(phi0_witness_no_positive_roots(IntPoly{-2, 1, 1}));
}
