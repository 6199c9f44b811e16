#pragma once

// Dense univariate polynomials over Z and Q.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace fdgb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense polynomial with arbitrary-precision integer coefficients.
/// coeffs()[i] is the coefficient of x^i; the zero polynomial has no
/// coefficients and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    /// Coefficients listed lowest degree first: {a0, a1, ...}.
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Integer& c);
    static IntPoly monomial(const Integer& c, std::size_t k);
    static IntPoly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    std::size_t size() const { return c_.size(); }

    const std::vector<Integer>& coeffs() const { return c_; }
    /// Coefficient of x^i (zero beyond the degree).
    Integer operator[](std::size_t i) const;
    const Integer& lc() const;
    const Integer& trailing_constant() const;

    Integer content() const;
    /// Primitive part with positive leading coefficient.
    IntPoly primitive() const;
    /// Largest k with x^k | p (0 for the zero polynomial).
    std::size_t x_valuation() const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly& operator*=(const Integer& c);

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

private:
    void trim();
    std::vector<Integer> c_;
};

IntPoly operator+(IntPoly a, const IntPoly& b);
IntPoly operator-(IntPoly a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const Integer& c, IntPoly a);
IntPoly operator*(IntPoly a, const Integer& c);

/// Divides every coefficient by c; throws if some coefficient is not divisible.
IntPoly divexact(const IntPoly& p, const Integer& c);
IntPoly pow(const IntPoly& p, unsigned e);
IntPoly derivative(const IntPoly& p);
/// p(x^k).
IntPoly compose_power(const IntPoly& p, unsigned k);
/// p(-x).
IntPoly reflect(const IntPoly& p);
/// x^deg(p) p(1/x).
IntPoly reverse(const IntPoly& p);
/// p(x + c).
IntPoly taylor_shift(const IntPoly& p, const Integer& c);
/// p(c x).
IntPoly scale_arg(const IntPoly& p, const Integer& c);
/// Divides by x^k; the low coefficients must vanish.
IntPoly shift_down(const IntPoly& p, std::size_t k);

Integer eval(const IntPoly& p, const Integer& x);
Rational eval(const IntPoly& p, const Rational& x);
int sign_at(const IntPoly& p, const Rational& x);

/// Euclidean division over Z when possible: returns q with p = q*d exactly,
/// or nothing if d does not divide p in Z[x].
std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& d);
/// Same as divide_exact but throws std::domain_error when not exact.
IntPoly exact_quotient(const IntPoly& p, const IntPoly& d);
/// Pseudo-remainder: lc(d)^(deg p - deg d + 1) p = q d + r.
IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& d);
/// Remainder of p modulo a polynomial with unit leading coefficient.
IntPoly rem_monic(const IntPoly& p, const IntPoly& d);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd_primitive(const IntPoly& p, const IntPoly& q);
/// Primitive lcm with positive leading coefficient.
IntPoly lcm_primitive(const IntPoly& p, const IntPoly& q);

struct SqfFactor {
    IntPoly factor;
    unsigned multiplicity;
};

/// content * prod factor^multiplicity == input. Factors are primitive,
/// square-free, pairwise coprime, with positive leading coefficient.
struct SqfDecomp {
    Integer content;
    std::vector<SqfFactor> factors;
};

SqfDecomp sqfree_decompose(const IntPoly& p);
/// Primitive square-free part with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& p);
bool is_squarefree(const IntPoly& p);

/// Largest d with p in Z[x^d]; a constant polynomial is rejected.
unsigned delta_support(const IntPoly& p);
/// Returns p^ with p^(x^d) == p.
IntPoly decompose_power(const IntPoly& p, unsigned d);

/// m-th cyclotomic polynomial.
IntPoly cyclotomic(unsigned m);
unsigned euler_phi(unsigned m);

/// Primitive, square-free q* whose roots are the d-th powers of the roots of q.
IntPoly resultant_power(const IntPoly& q, unsigned d);
/// Res_u(u^n p(x/u), p(u)): roots are the products of ordered root pairs of p.
IntPoly resultant_product(const IntPoly& p);
/// Res_u(p(u), q(u x)): roots are (root of q)/(root of p) over ordered pairs.
IntPoly resultant_ratio(const IntPoly& p, const IntPoly& q);
/// Plain Sylvester resultant of two integer polynomials.
Integer resultant(const IntPoly& p, const IntPoly& q);

/// First k+1 coefficients of the power series 1/f.
std::vector<Rational> power_series_inverse(const IntPoly& f, std::size_t k);

/// Dense polynomial with rational coefficients (lowest degree first).
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    explicit RatPoly(const IntPoly& p);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational operator[](std::size_t i) const;
    const Rational& lc() const { return c_.back(); }

    RatPoly& operator-=(const RatPoly& o);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    /// Clears denominators and returns the primitive integer multiple.
    IntPoly primitive_integer() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Remainder of a modulo b over Q.
RatPoly rem(const RatPoly& a, const RatPoly& b);

/// Canonical text in descending degree, e.g. "x^3 - 2*x + 1".
std::string to_string(const IntPoly& p, const std::string& var = "x");

}  // namespace fdgb
