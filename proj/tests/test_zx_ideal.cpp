#include <catch_amalgamated.hpp>

#include <random>

#include "fdgb/phi.hpp"
#include "fdgb/zx_ideal.hpp"

using namespace fdgb;

namespace {

// Structure: degrees increase, leading coefficients divide
// downward and strictly, c_i / c_k divides g_i, pp(g_1) divides the rest.
void check_structure(const ZxGB& b) {
    const auto& E = b.elements;
    REQUIRE_FALSE(E.empty());
    const Integer ck = E.back().lc();
    for (std::size_t i = 0; i < E.size(); ++i) {
        CHECK(sgn(E[i].lc()) > 0);
        if (i + 1 < E.size()) {
            CHECK(E[i].degree() < E[i + 1].degree());
            CHECK(mpz_divisible_p(E[i].lc().get_mpz_t(), E[i + 1].lc().get_mpz_t()));
            CHECK(E[i].lc() != E[i + 1].lc());
            CHECK(mpz_divisible_p(E[i].content().get_mpz_t(), Integer(E[i].lc() / ck).get_mpz_t()));
        }
        if (i > 0) CHECK(divide_exact(E[i], E[0].primitive()).has_value());
    }
}

}  // namespace

TEST_CASE("zx_groebner examples") {
    CHECK(zx_groebner({IntPoly{4}, IntPoly{0, 2}}).elements == std::vector<IntPoly>{IntPoly{4}, IntPoly{0, 2}});
    CHECK(zx_groebner({IntPoly{15}, IntPoly{0, 5}, IntPoly{3, 0, 1}}).elements ==
          std::vector<IntPoly>{IntPoly{15}, IntPoly{0, 5}, IntPoly{3, 0, 1}});
    const IntPoly q{-2, 0, 1};
    auto b = zx_groebner({IntPoly{2} * q, q * IntPoly{1, 1}});
    CHECK(b.elements == std::vector<IntPoly>{IntPoly{-4, 0, 2}, IntPoly{-2, -2, 1, 1}});
    check_structure(b);
    CHECK_THROWS_AS(zx_groebner({IntPoly{}, IntPoly{}}), std::invalid_argument);
    // generators with a common unit combination collapse to {1}
    CHECK(zx_groebner({IntPoly{2}, IntPoly{3}}).elements == std::vector<IntPoly>{IntPoly{1}});
    CHECK(zx_groebner({IntPoly{-1, 0, 2}}).elements == std::vector<IntPoly>{IntPoly{-1, 0, 2}});
}

TEST_CASE("zx_reduce examples") {
    const IntPoly q{-2, 0, 1};
    auto b = zx_groebner({IntPoly{2} * q, q * IntPoly{1, 1}});
    CHECK(zx_reduce(IntPoly{-2, 0, -1, 0, 1}, b).is_zero());
    CHECK_FALSE(zx_reduce(q, b).is_zero());
    CHECK(zx_reduce(IntPoly{}, b).is_zero());
}

TEST_CASE("random ideals: structure and generator membership") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> co(-6, 6), dg(0, 3), ng(1, 3);
    const std::vector<IntPoly> factors{IntPoly{1}, IntPoly{-2, 0, 1}, IntPoly{1, 1}, IntPoly{1, -1, 1}};
    for (int it = 0; it < 300; ++it) {
        const IntPoly common = factors[static_cast<std::size_t>(it % 4)];
        std::vector<IntPoly> gens;
        for (int k = ng(rng); k > 0; --k) {
            std::vector<Integer> c(static_cast<std::size_t>(dg(rng)) + 1);
            for (auto& a : c) a = co(rng);
            gens.push_back(common * IntPoly(std::move(c)));
        }
        bool all_zero = std::all_of(gens.begin(), gens.end(), [](const IntPoly& g) { return g.is_zero(); });
        if (all_zero) continue;
        auto b = zx_groebner(gens);
        check_structure(b);
        for (const auto& g : gens) CHECK(zx_reduce(g, b).is_zero());
        // combinations are members; perturbed ones mostly are not
        IntPoly comb;
        for (const auto& g : gens) comb += g * IntPoly{co(rng), co(rng)};
        CHECK(zx_reduce(comb, b).is_zero());
        // the basis does not depend on the generator order
        std::vector<IntPoly> rev(gens.rbegin(), gens.rend());
        CHECK(zx_groebner(rev).elements == b.elements);
    }
}

TEST_CASE("finite_sgb_criterion examples") {
    const IntPoly q{-2, 0, 1};
    auto b = zx_groebner({IntPoly{2} * q, q * IntPoly{1, 1}});
    auto r = finite_sgb_criterion(b, 8);
    CHECK(r.kind == CriterionKind::Finite);
    REQUIRE(r.witness);
    CHECK(*r.witness == IntPoly{-2, 0, -1, 0, 1});
    CHECK(r.rule == "d");
    CHECK(membership_phi1(q * IntPoly{1, 1}).kind == Phi1Kind::No);

    auto inf = finite_sgb_criterion(zx_groebner({IntPoly{1, -2, 1}}), 8);
    CHECK(inf.kind == CriterionKind::Infinite);
    CHECK(inf.rule == "a");

    auto cyc = finite_sgb_criterion(zx_groebner({IntPoly{1, 1, 1}}), 8);
    REQUIRE(cyc.kind == CriterionKind::Finite);
    CHECK(in_phi0(*cyc.witness));
    CHECK(cyc.rule == "b");

    // g1 without positive roots while g_t is not in Phi1
    auto c = zx_groebner({IntPoly{1, 0, 1} * IntPoly{2}, IntPoly{1, 0, 1} * IntPoly{-5, 1, 1}});
    CHECK(c.last() == IntPoly{-1, 1, 0, 1, 1});
    CHECK(membership_phi1(c.last()).kind == Phi1Kind::No);
    auto rc = finite_sgb_criterion(c, 4);
    REQUIRE(rc.kind == CriterionKind::Finite);
    CHECK(in_phi0(*rc.witness));
    CHECK(rc.witness->lc() == c.last().lc());
    CHECK(zx_reduce(*rc.witness, c).is_zero());
    CHECK(rc.rule == "c");
}

TEST_CASE("criterion on principal ideals agrees with Phi1 membership") {
    int finite = 0;
    for (long a2 = 1; a2 <= 2; ++a2)
        for (long a1 = -4; a1 <= 4; ++a1)
            for (long a0 = -4; a0 <= 4; ++a0) {
                if (a0 == 0) continue;
                const IntPoly f{a0, a1, a2};
                auto v = membership_phi1(f);
                auto r = finite_sgb_criterion(zx_groebner({f}), 8);
                switch (v.kind) {
                    case Phi1Kind::No: CHECK(r.kind == CriterionKind::Infinite); break;
                    case Phi1Kind::ConjecturalYes: CHECK(r.kind != CriterionKind::Infinite); break;
                    default:
                        CHECK(r.kind == CriterionKind::Finite);
                        ++finite;
                }
                if (r.witness) {
                    CHECK(in_phi0(*r.witness));
                    CHECK(r.witness->lc() == f.lc());
                }
            }
    CHECK(finite > 30);
    auto cj = finite_sgb_criterion(zx_groebner({IntPoly{-2, 1, -1, 1}}), 3);
    CHECK(cj.kind == CriterionKind::Unknown);
    CHECK(cj.bound_used == 3);
    CHECK(finite_sgb_criterion(zx_groebner({IntPoly{-2, 1, -1, 1}}), 4).kind == CriterionKind::Finite);
}

TEST_CASE("multi_finite_gb examples") {
    const IntPoly q{-2, 0, 1};
    auto b = zx_groebner({IntPoly{2} * q, q * IntPoly{1, 1}});
    auto m = multi_finite_gb(b, IntPoly{-2, 0, -1, 0, 1});
    CHECK(m.certified);
    CHECK(m.D == 4);
    BinomialBasis direct{m.elements, 4, false};
    CHECK_FALSE(grem(to_binomial(IntPoly{-2, 0, -1, 0, 1}), direct).has_value());
    CHECK_FALSE(grem(to_binomial(IntPoly{-4, 0, 2}), direct).has_value());

    auto lin = multi_finite_gb(zx_groebner({IntPoly{-1, 1}}), IntPoly{-1, 1});
    CHECK(lin.elements == std::vector<DiffBinomial>{{IntPoly{0, 1}, IntPoly{1}}});
    CHECK(lin.certified);

    auto cyc = multi_finite_gb(zx_groebner({IntPoly{1, 1, 1}}), IntPoly{-1, 0, 0, 1});
    CHECK(cyc.elements == gb_truncated(IntPoly{1, 1, 1}, 3).elements);
    CHECK(cyc.certified);

    CHECK_THROWS_AS(multi_finite_gb(b, IntPoly{-2, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(multi_finite_gb(b, IntPoly{-1, 0, 0, 0, 1}), std::invalid_argument);
}
