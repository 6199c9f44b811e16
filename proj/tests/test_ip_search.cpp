#include <catch_amalgamated.hpp>

#include <random>

#include "fdgb/ip_search.hpp"
#include "fdgb/phi.hpp"

using namespace fdgb;

namespace {

IntPoly monic(const std::vector<long>& low) {
    std::vector<Integer> c(low.begin(), low.end());
    c.push_back(1);
    return IntPoly(std::move(c));
}

std::vector<IntPoly> quadratic_grid() {
    std::vector<IntPoly> out;
    for (long a2 = 1; a2 <= 2; ++a2)
        for (long a1 = -5; a1 <= 5; ++a1)
            for (long a0 = 1; a0 <= 5; ++a0)
                if (a1 * a1 < 4 * a0 * a2) out.push_back(IntPoly{a0, a1, a2});
    return out;
}

}  // namespace

TEST_CASE("Phi0 system layout") {
    auto s = build_phi0_system(IntPoly{2, -2, 1}, 1);
    REQUIRE(s.matrix.size() == 3);
    CHECK(s.matrix[0] == std::vector<Integer>{-2, 1});
    CHECK(s.matrix[1] == std::vector<Integer>{2, -2});
    CHECK(s.matrix[2] == std::vector<Integer>{0, 2});
    CHECK_FALSE(feasible_rational(s));

    auto t = build_phi0_system(IntPoly{-2, 1}, 0);
    REQUIRE(t.matrix.size() == 1);
    CHECK(t.matrix[0] == std::vector<Integer>{-2});
    CHECK(feasible_rational(t));
    CHECK_FALSE(feasible_rational(build_phi0_system(IntPoly{2, 1}, 0)));

    auto u = build_phi0_system(IntPoly{2, -1, 1}, 2);
    CHECK(u.matrix.size() == 4);
    CHECK(u.matrix[0].size() == 3);
    CHECK(feasible_rational(u));
    CHECK(u.satisfied_by({-5, -7}));
}

TEST_CASE("system satisfaction matches the product test") {
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> c5(-5, 5), c10(-10, 10), lead(1, 5);
    for (int it = 0; it < 3000; ++it) {
        std::vector<Integer> fc(static_cast<std::size_t>(1 + it % 4) + 1);
        for (auto& a : fc) a = c5(rng);
        fc.back() = lead(rng);
        IntPoly f(std::move(fc));
        const unsigned m = static_cast<unsigned>(it % 4);
        std::vector<Integer> b(m);
        std::vector<long> low(m);
        for (unsigned j = 0; j < m; ++j) {
            low[j] = c10(rng);
            b[m - 1 - j] = low[j];
        }
        CHECK(build_phi0_system(f, m).satisfied_by(b) == in_phi0(f * monic(low)));
    }
}

TEST_CASE("find_witness examples") {
    auto a = find_witness(IntPoly{2, -1, 1}, 4);
    REQUIRE(a);
    CHECK(a->m_min == 2);
    CHECK(in_phi0(IntPoly{2, -1, 1} * IntPoly{-7, -5, 1}));

    auto b = find_witness(IntPoly{2, -2, 1}, 6);
    REQUIRE(b);
    CHECK(b->m_min == 4);
    CHECK(IntPoly{2, -2, 1} * IntPoly{-4, -4, -2, 0, 1} == IntPoly{-8, 0, 0, 0, 0, -2, 1});

    auto c = find_witness(IntPoly{-2, 1}, 3);
    REQUIRE(c);
    CHECK(c->m_min == 0);
    CHECK(c->g == IntPoly{1});

    CHECK_FALSE(find_witness(IntPoly{1, -2, 1}, 4).has_value());
}

TEST_CASE("witness minimality by enumeration") {
    for (const auto& f : {IntPoly{2, -1, 1}, IntPoly{2, -2, 1}, IntPoly{3, -2, 1}, IntPoly{-2, 1, -1, 1}}) {
        auto w = find_witness(f, 8);
        REQUIRE(w);
        CHECK(w->open_degrees.empty());
        // no monic g of lower degree with coefficients in [-12, 12]
        for (unsigned m = 0; m < w->m_min; ++m) {
            std::vector<long> low(m, -12);
            bool hit = false;
            for (;;) {
                if (in_phi0(f * monic(low))) hit = true;
                std::size_t k = 0;
                while (k < m && low[k] == 12) low[k++] = -12;
                if (k == m) break;
                ++low[k];
            }
            CHECK_FALSE(hit);
        }
    }
}

TEST_CASE("series and complex lower bounds") {
    CHECK(series_lower_bound(IntPoly{2, -2, 1}).bound == 4);
    CHECK(series_lower_bound(IntPoly{2, -1, 1}).bound == 2);
    CHECK(series_lower_bound(IntPoly{-2, 1}).bound == 0);
    CHECK_FALSE(series_lower_bound(IntPoly{2, -3, 1}).conclusive);

    CHECK(complex_lower_bound(IntPoly{2, -2, 1}) == 4);
    CHECK(complex_lower_bound(IntPoly{1, 1} * IntPoly{2, -2, 1}) == 3);
    CHECK(complex_lower_bound(IntPoly{1, 0, 1}) == 2);
    CHECK_THROWS(complex_lower_bound(IntPoly{-2, 1}));
}

TEST_CASE("quadratic minimal degree") {
    CHECK(quadratic_min_degree(IntPoly{2, -1, 1}) == 2);
    CHECK(quadratic_min_degree(IntPoly{2, -2, 1}) == 4);
    CHECK(quadratic_min_degree(IntPoly{1, 1, 1}) == 1);
    CHECK(in_phi0(IntPoly{-3, 1} * IntPoly{1, 1, 1}));
    auto t = delta_trace(IntPoly{2, -2, 1});
    CHECK(t.values == std::vector<Rational>{-2, -1, 0});
    CHECK(t.terminal == 3);
    CHECK_THROWS(quadratic_min_degree(IntPoly{-1, 0, 1}));
}

TEST_CASE("quadratic grid: formula, search and bounds agree") {
    int cases = 0;
    for (const auto& f : quadratic_grid()) {
        ++cases;
        auto w = find_witness(f, 8);
        REQUIRE(w);
        CHECK(quadratic_min_degree(f) == w->m_min);
        auto sb = series_lower_bound(f);
        if (sb.conclusive) CHECK(sb.bound <= w->m_min);
        CHECK(complex_lower_bound(f) <= w->m_min);
        if (sgn(f[1]) < 0) {
            auto t = delta_trace(f);
            for (std::size_t j = 0; j + 1 < t.values.size(); ++j) CHECK(sgn(t.values[j]) < 0);
        }
    }
    CHECK(cases > 50);
}

TEST_CASE("infeasible systems stay small") {
    // No-verdict polynomials whose elimination used to explode.
    for (const IntPoly& f : {IntPoly{-6, -4, 4, 1}, IntPoly{-2, -2, -3, 4, 2}, IntPoly{-4, 1, 4, 5}}) {
        CHECK(membership_phi1(f).kind == Phi1Kind::No);
        auto w = find_witness(f, 10);
        CHECK_FALSE(w);
    }
}
