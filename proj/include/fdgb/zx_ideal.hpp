#pragma once

// Ideals of Z[x] and finiteness of sigma-Groebner bases for several generators.

#include <optional>
#include <vector>

#include "fdgb/int_poly.hpp"
#include "fdgb/sigma_gb.hpp"

namespace fdgb {

/// Reduced strong Groebner basis, sorted by degree; leading coefficients
/// positive and strictly decreasing under divisibility.
struct ZxGB {
    std::vector<IntPoly> elements;

    const IntPoly& last() const { return elements.back(); }
};

ZxGB zx_groebner(const std::vector<IntPoly>& gens);

/// Canonical remainder; zero iff p lies in the ideal.
IntPoly zx_reduce(const IntPoly& p, const ZxGB& basis);

enum class CriterionKind { Finite, Infinite, Unknown };

const char* to_string(CriterionKind k);

struct CriterionResult {
    CriterionKind kind = CriterionKind::Unknown;
    /// h in the ideal, in Phi0, with lc(h) = lc(g_t) (Finite only).
    std::optional<IntPoly> witness;
    /// Which test decided: "a" .. "e".
    std::string rule;
    unsigned bound_used = 0;
};

CriterionResult finite_sgb_criterion(const ZxGB& basis, unsigned degree_cap);

/// Degree-d slice search: h = x^(d - d_t) g_t + lower basis shifts in Phi0.
std::optional<IntPoly> phi0_in_ideal(const ZxGB& basis, unsigned d, unsigned long node_cap = 100000);

BinomialBasis multi_finite_gb(const ZxGB& basis, const IntPoly& witness);

}  // namespace fdgb
