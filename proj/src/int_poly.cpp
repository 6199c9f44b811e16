#include "fdgb/int_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace fdgb {

namespace {

const Integer& zero_integer() {
    static const Integer z = 0;
    return z;
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Integer IntPoly::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }

const Integer& IntPoly::lc() const { return c_.empty() ? zero_integer() : c_.back(); }

const Integer& IntPoly::trailing_constant() const { return c_.empty() ? zero_integer() : c_.front(); }

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& a : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive() const {
    if (c_.empty()) return {};
    Integer g = content();
    if (sgn(lc()) < 0) g = -g;
    return divexact(*this, g);
}

std::size_t IntPoly::x_valuation() const {
    std::size_t k = 0;
    while (k < c_.size() && sgn(c_[k]) == 0) ++k;
    return c_.empty() ? 0 : k;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
    *this = *this * o;
    return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
    if (sgn(c) == 0) {
        c_.clear();
        return *this;
    }
    for (auto& a : c_) a *= c;
    return *this;
}

IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.size() + b.size() - 1);
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (sgn(ac[i]) == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
    }
    return IntPoly(std::move(r));
}

IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }

IntPoly divexact(const IntPoly& p, const Integer& c) {
    if (sgn(c) == 0) throw std::domain_error("divexact: division by zero");
    std::vector<Integer> r(p.coeffs());
    for (auto& a : r) {
        if (!mpz_divisible_p(a.get_mpz_t(), c.get_mpz_t())) throw std::domain_error("divexact: not divisible");
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    }
    return IntPoly(std::move(r));
}

IntPoly pow(const IntPoly& p, unsigned e) {
    IntPoly result = IntPoly::constant(1);
    IntPoly base = p;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

IntPoly derivative(const IntPoly& p) {
    if (p.degree() < 1) return {};
    std::vector<Integer> r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(r));
}

IntPoly compose_power(const IntPoly& p, unsigned k) {
    if (k == 0) throw std::invalid_argument("compose_power: exponent must be positive");
    if (p.is_zero()) return {};
    std::vector<Integer> r(static_cast<std::size_t>(p.degree()) * k + 1);
    for (std::size_t i = 0; i < p.size(); ++i) r[i * k] = p.coeffs()[i];
    return IntPoly(std::move(r));
}

IntPoly reflect(const IntPoly& p) {
    std::vector<Integer> r(p.coeffs());
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return IntPoly(std::move(r));
}

IntPoly reverse(const IntPoly& p) {
    std::vector<Integer> r(p.coeffs().rbegin(), p.coeffs().rend());
    return IntPoly(std::move(r));
}

IntPoly taylor_shift(const IntPoly& p, const Integer& c) {
    std::vector<Integer> a(p.coeffs());
    const std::size_t n = a.size();
    if (n <= 1 || sgn(c) == 0) return p;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j-- > i;) mpz_addmul(a[j].get_mpz_t(), a[j + 1].get_mpz_t(), c.get_mpz_t());
    }
    return IntPoly(std::move(a));
}

IntPoly scale_arg(const IntPoly& p, const Integer& c) {
    std::vector<Integer> a(p.coeffs());
    Integer f = 1;
    for (auto& v : a) {
        v *= f;
        f *= c;
    }
    return IntPoly(std::move(a));
}

IntPoly shift_down(const IntPoly& p, std::size_t k) {
    if (k == 0) return p;
    if (k > p.x_valuation() && !p.is_zero()) throw std::domain_error("shift_down: not divisible by x^k");
    if (p.is_zero()) return {};
    return IntPoly(std::vector<Integer>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(k), p.coeffs().end()));
}

Integer eval(const IntPoly& p, const Integer& x) {
    Integer r = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        r *= x;
        r += *it;
    }
    return r;
}

Rational eval(const IntPoly& p, const Rational& x) {
    // Homogenized Horner on numerator/denominator keeps the arithmetic integral.
    if (p.is_zero()) return 0;
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    Integer acc = 0;
    Integer dpow = 1;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc *= num;
        acc += *it * dpow;
        dpow *= den;
    }
    // acc = den^deg * p(x); dpow = den^(deg+1)
    Rational r(acc * den, dpow);
    r.canonicalize();
    return r;
}

int sign_at(const IntPoly& p, const Rational& x) {
    if (p.is_zero()) return 0;
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    Integer acc = 0;
    Integer dpow = 1;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc *= num;
        acc += *it * dpow;
        dpow *= den;
    }
    return sgn(acc);
}

std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& d) {
    if (d.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    if (p.is_zero()) return IntPoly{};
    if (p.degree() < d.degree()) return std::nullopt;
    std::vector<Integer> r(p.coeffs());
    const auto n = static_cast<std::size_t>(d.degree());
    std::vector<Integer> q(r.size() - n);
    const Integer& lead = d.lc();
    Integer t;
    for (std::size_t k = q.size(); k-- > 0;) {
        Integer& top = r[k + n];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        q[k] = t;
        for (std::size_t j = 0; j <= n; ++j) mpz_submul(r[k + j].get_mpz_t(), t.get_mpz_t(), d.coeffs()[j].get_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j)
        if (sgn(r[j]) != 0) return std::nullopt;
    return IntPoly(std::move(q));
}

IntPoly exact_quotient(const IntPoly& p, const IntPoly& d) {
    auto q = divide_exact(p, d);
    if (!q) throw std::domain_error("exact_quotient: divisor does not divide dividend");
    return *q;
}

IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& d) {
    if (d.is_zero()) throw std::domain_error("pseudo_remainder: division by zero polynomial");
    if (p.degree() < d.degree()) return p;
    std::vector<Integer> r(p.coeffs());
    const auto n = static_cast<std::size_t>(d.degree());
    const Integer& lead = d.lc();
    for (std::size_t top = r.size(); top-- > n;) {
        Integer t = r[top];
        for (std::size_t j = 0; j < top; ++j) r[j] *= lead;
        r[top] = 0;
        if (sgn(t) == 0) continue;
        const std::size_t k = top - n;
        for (std::size_t j = 0; j < n; ++j) mpz_submul(r[k + j].get_mpz_t(), t.get_mpz_t(), d.coeffs()[j].get_mpz_t());
    }
    r.resize(n);
    return IntPoly(std::move(r));
}

IntPoly rem_monic(const IntPoly& p, const IntPoly& d) {
    if (d.is_zero() || abs(d.lc()) != 1) throw std::domain_error("rem_monic: divisor must have unit leading coefficient");
    if (p.degree() < d.degree()) return p;
    std::vector<Integer> r(p.coeffs());
    const auto n = static_cast<std::size_t>(d.degree());
    const int s = sgn(d.lc());
    for (std::size_t top = r.size(); top-- > n;) {
        Integer t = r[top];
        if (sgn(t) == 0) continue;
        if (s < 0) t = -t;
        const std::size_t k = top - n;
        for (std::size_t j = 0; j <= n; ++j) mpz_submul(r[k + j].get_mpz_t(), t.get_mpz_t(), d.coeffs()[j].get_mpz_t());
    }
    r.resize(n);
    return IntPoly(std::move(r));
}

IntPoly gcd_primitive(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() && q.is_zero()) return {};
    if (p.is_zero()) return q.primitive();
    if (q.is_zero()) return p.primitive();
    IntPoly a = p.primitive();
    IntPoly b = q.primitive();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.degree() == 0) return IntPoly::constant(1);
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.primitive();
    }
    return a.primitive();
}

IntPoly lcm_primitive(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    IntPoly g = gcd_primitive(p, q);
    return (exact_quotient(p.primitive(), g) * q.primitive()).primitive();
}

SqfDecomp sqfree_decompose(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("sqfree_decompose: zero polynomial");
    SqfDecomp out;
    if (p.degree() == 0) {
        out.content = p.lc();
        return out;
    }
    const IntPoly a = p.primitive();
    IntPoly c = gcd_primitive(a, derivative(a));
    IntPoly w = exact_quotient(a, c);
    IntPoly y = exact_quotient(derivative(a), c);
    IntPoly z = y - derivative(w);
    unsigned i = 1;
    while (w.degree() > 0) {
        IntPoly g = gcd_primitive(w, z);
        if (g.degree() > 0) out.factors.push_back({g, i});
        w = exact_quotient(w, g);
        y = exact_quotient(z, g);
        z = y - derivative(w);
        ++i;
    }
    IntPoly prod = IntPoly::constant(1);
    for (const auto& f : out.factors) prod *= pow(f.factor, f.multiplicity);
    IntPoly quot = exact_quotient(p, prod);
    if (quot.degree() != 0) throw std::logic_error("sqfree_decompose: reconstruction failed");
    out.content = quot.lc();
    return out;
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (p.degree() <= 0) return IntPoly::constant(1);
    IntPoly a = p.primitive();
    return exact_quotient(a, gcd_primitive(a, derivative(a))).primitive();
}

bool is_squarefree(const IntPoly& p) {
    if (p.degree() <= 0) return true;
    return gcd_primitive(p, derivative(p)).degree() == 0;
}

unsigned delta_support(const IntPoly& p) {
    if (p.degree() <= 0) throw std::invalid_argument("delta_support: constant polynomial");
    unsigned long g = 0;
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (sgn(p.coeffs()[i]) == 0) continue;
        unsigned long a = i;
        unsigned long b = g;
        while (b != 0) {
            a %= b;
            std::swap(a, b);
        }
        g = a;
    }
    return static_cast<unsigned>(g);
}

IntPoly decompose_power(const IntPoly& p, unsigned d) {
    if (d == 0) throw std::invalid_argument("decompose_power: exponent must be positive");
    if (d == 1 || p.is_zero()) return p;
    std::vector<Integer> r(static_cast<std::size_t>(p.degree()) / d + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (sgn(p.coeffs()[i]) == 0) continue;
        if (i % d != 0) throw std::invalid_argument("decompose_power: polynomial is not in Z[x^d]");
        r[i / d] = p.coeffs()[i];
    }
    return IntPoly(std::move(r));
}

namespace {

int moebius(unsigned n) {
    int mu = 1;
    for (unsigned q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        n /= q;
        if (n % q == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace

unsigned euler_phi(unsigned m) {
    if (m == 0) return 0;
    unsigned result = m;
    unsigned n = m;
    for (unsigned q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        while (n % q == 0) n /= q;
        result -= result / q;
    }
    if (n > 1) result -= result / n;
    return result;
}

IntPoly cyclotomic(unsigned m) {
    if (m == 0) throw std::invalid_argument("cyclotomic: order must be positive");
    // Phi_m = prod_{d | m} (x^d - 1)^mu(m/d): multiply first, then divide.
    std::vector<unsigned> up;
    std::vector<unsigned> down;
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        int mu = moebius(m / d);
        if (mu == 1) up.push_back(d);
        if (mu == -1) down.push_back(d);
    }
    std::vector<Integer> c{1};
    for (unsigned d : up) {
        std::vector<Integer> r(c.size() + d);
        for (std::size_t i = 0; i < c.size(); ++i) {
            r[i + d] += c[i];
            r[i] -= c[i];
        }
        c = std::move(r);
    }
    for (unsigned d : down) {
        // c = q (x^d - 1): q_i = q_{i+d} - c_{i+d}... solved from the top down.
        const std::size_t qn = c.size() - d;
        std::vector<Integer> q(qn);
        for (std::size_t i = qn; i-- > 0;) {
            q[i] = c[i + d];
            if (i + d < qn) q[i] += q[i + d];
        }
        c = std::move(q);
    }
    return IntPoly(std::move(c));
}

std::vector<Rational> power_series_inverse(const IntPoly& f, std::size_t k) {
    if (f.is_zero() || sgn(f.trailing_constant()) == 0) throw std::invalid_argument("power_series_inverse: f(0) must be nonzero");
    std::vector<Rational> lam(k + 1);
    const Rational a0(f.coeffs()[0]);
    lam[0] = 1 / a0;
    for (std::size_t j = 1; j <= k; ++j) {
        Rational s = 0;
        const std::size_t top = std::min<std::size_t>(j, static_cast<std::size_t>(f.degree()));
        for (std::size_t i = 1; i <= top; ++i) s += Rational(f.coeffs()[i]) * lam[j - i];
        lam[j] = -s / a0;
    }
    return lam;
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(const IntPoly& p) {
    c_.reserve(p.size());
    for (const auto& a : p.coeffs()) c_.emplace_back(a);
}

void RatPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational RatPoly::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(r));
}

IntPoly RatPoly::primitive_integer() const {
    Integer l = 1;
    for (const auto& a : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
    std::vector<Integer> r;
    r.reserve(c_.size());
    for (const auto& a : c_) r.emplace_back(a.get_num() * (l / a.get_den()));
    return IntPoly(std::move(r)).primitive();
}

RatPoly rem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("rem: division by zero polynomial");
    std::vector<Rational> r(a.coeffs());
    const auto n = static_cast<std::size_t>(b.degree());
    const Rational& lead = b.lc();
    for (std::size_t top = r.size(); top-- > n;) {
        if (sgn(r[top]) == 0) continue;
        Rational t = r[top] / lead;
        const std::size_t k = top - n;
        for (std::size_t j = 0; j <= n; ++j) r[k + j] -= t * b.coeffs()[j];
    }
    if (r.size() > n) r.resize(n);
    return RatPoly(std::move(r));
}

std::string to_string(const IntPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
        const Integer& c = p.coeffs()[k];
        if (sgn(c) == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

}  // namespace fdgb
