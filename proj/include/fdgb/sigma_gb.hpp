#pragma once

// Binomial difference ideals sat(y^{f+} - y^{f-}) and their Groebner bases.

#include <optional>
#include <vector>

#include "fdgb/int_poly.hpp"
#include "fdgb/phi.hpp"

namespace fdgb {

/// y^plus - y^minus; exponents are polynomials in x with nonnegative
/// coefficients (x^i stands for the i-th shift).
struct DiffBinomial {
    IntPoly plus;
    IntPoly minus;

    IntPoly exponent() const { return plus - minus; }
    friend bool operator==(const DiffBinomial& a, const DiffBinomial& b) {
        return a.plus == b.plus && a.minus == b.minus;
    }
};

DiffBinomial to_binomial(const IntPoly& f);

/// Exponent vector over y_0 .. y_D and the saturation variable w (last slot).
using TruncMonomial = std::vector<long>;

/// lead - trail with lead > trail in lex order w > y_D > ... > y_0.
struct TruncBinomial {
    TruncMonomial lead;
    TruncMonomial trail;
    friend bool operator==(const TruncBinomial& a, const TruncBinomial& b) {
        return a.lead == b.lead && a.trail == b.trail;
    }
};

/// Lex comparison with the last slot most significant.
int lex_compare(const TruncMonomial& a, const TruncMonomial& b);

/// Which monomial the saturation variable inverts.
enum class Saturation {
    Initials,      // w J^{1 + x + ... + x^(D - deg f)} - 1, J = y^{f+ - lt f}
    AllVariables,  // w y_0 ... y_D - 1
};

/// Generators P_{x^i f}, i = 0 .. D - deg f, and the saturation binomial.
std::vector<TruncBinomial> truncated_generators(const IntPoly& f, unsigned D,
                                                Saturation sat = Saturation::Initials);

/// Reduced Groebner basis of the binomial ideal; elements involving the last
/// variable are dropped when eliminate_last is set.
std::vector<TruncBinomial> buchberger_binomial(std::vector<TruncBinomial> gens, bool eliminate_last = true);

struct BinomialBasis {
    std::vector<DiffBinomial> elements;
    unsigned D = 0;
    bool certified = false;
};

/// Basis of the saturated ideal generated by P_{x^j g}, deg(x^j g) <= D, over
/// all g in gens, reduced under shifts; not certified.
BinomialBasis basis_from_generators(const std::vector<IntPoly>& gens, unsigned D,
                                    Saturation sat = Saturation::Initials);

/// Groebner basis of sat(P_f) restricted to y_0 .. y_D, reduced under shifts.
BinomialBasis gb_truncated(const IntPoly& f, unsigned D, Saturation sat = Saturation::Initials);

/// S-pairs of all in-range shifts reduce to zero, every P_{x^i f} of degree
/// <= D reduces to zero, and some exponent lies in Phi0 with lc(f).
bool certify_sigma_gb(const BinomialBasis& basis, const IntPoly& f);
/// Same checks with P_{x^j g} for every g in gens and a Phi0 exponent with
/// leading coefficient lc.
bool certify_sigma_gb(const BinomialBasis& basis, const std::vector<IntPoly>& gens, const Integer& lc);

/// Normal form under shifted basis elements, common factors cancelled;
/// nothing when b reduces to zero.
std::optional<DiffBinomial> grem(const DiffBinomial& b, const BinomialBasis& basis);

bool ideal_membership(const IntPoly& g, const IntPoly& f);

/// s_0 = f, s_{i+1} = (x^{n_i} - c_i x^{m_i}) s_i; returns s_1 .. s_k.
std::vector<IntPoly> infinite_gb_stream(const IntPoly& f, unsigned k);

/// deg(u) - deg(u+ - lt u).
long gap_degree(const IntPoly& u);

enum class GbKind { Basis, Infinite, Undecided };

struct FiniteGbResult {
    GbKind kind = GbKind::Undecided;
    std::optional<BinomialBasis> basis;
    Phi1Verdict verdict;
};

inline constexpr unsigned kDefaultConjectureCap = 12;

FiniteGbResult finite_gb(const IntPoly& f, unsigned conjecture_cap = kDefaultConjectureCap);

/// Text form "y^[x^3] - y"; y^[0] is written 1.
std::string to_string(const DiffBinomial& b);

}  // namespace fdgb
