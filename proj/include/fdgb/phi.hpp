#pragma once

// Membership in Phi0 / Phi1 and the supporting constructions.

#include <optional>
#include <string>
#include <vector>

#include "fdgb/circle.hpp"
#include "fdgb/int_poly.hpp"
#include "fdgb/real_roots.hpp"

namespace fdgb {

/// Positive part of f is exactly its leading term.
bool in_phi0(const IntPoly& f);

struct Normalized {
    Integer content;
    std::size_t shift = 0;
    IntPoly core;
};

/// f = content * x^shift * core with core primitive and core(0) != 0.
/// Throws on f = 0 or lc(f) < 0.
Normalized normalize(const IntPoly& f);

/// Primitive generator of (f) ∩ Z[x^delta], read through x^delta -> x.
IntPoly compute_fstar(const IntPoly& f, unsigned delta);

/// lcm over the least m with (z / x_plus)^m = 1 for the roots z != x_plus on
/// the circle |z| = x_plus; nothing if some ratio is not a root of unity.
std::optional<unsigned> minimal_delta(const IntPoly& f, const RealAlgebraic& x_plus);

enum class Phi1Kind { InPhi0, Yes, No, ConjecturalYes };

enum class NoReason {
    TwoPositiveRoots,
    PositiveRootBelowOne,
    RootOutsideCircle,
    NonUnityRatio,
    FstarFails,
    LcMismatch,
    DeltaSearchFails,
};

const char* to_string(Phi1Kind k);
const char* to_string(NoReason r);

struct Phi1Verdict {
    Phi1Kind kind = Phi1Kind::No;
    /// Monic g with core * g in Phi0 (InPhi0 and Yes only).
    std::optional<IntPoly> witness;
    std::optional<NoReason> reason;
    /// Steps taken; steps of the recursive call on f* are prefixed "f*:".
    std::vector<std::string> trace;

    /// The step that decided the verdict ("1", "2", "4.2", ...).
    std::string step;
    /// delta found in step 4.2, 4.3 or 4.6.
    std::optional<unsigned> delta;
    std::optional<IntPoly> fstar;
    /// The normalized polynomial the verdict refers to.
    IntPoly core;
};

Phi1Verdict membership_phi1(const IntPoly& f);

struct PolyaData {
    Rational lambda_lower;
    bool lambda_exact = false;
    Rational L;
    unsigned N_f = 0;
};

/// Effective exponent with (x+1)^N_f f having positive coefficients; f must be
/// positive on [0, inf).
PolyaData polya_exponent(const IntPoly& f);
/// Least N with (x+1)^N f having positive coefficients.
unsigned minimal_positivity_exponent(const IntPoly& f);

/// Monic g with f g in Phi0 for f without positive roots (1 when f is
/// already in Phi0).
IntPoly phi0_witness_no_positive_roots(const IntPoly& f);

}  // namespace fdgb
