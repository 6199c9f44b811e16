#include "fdgb/circle.hpp"

#include <stdexcept>

namespace fdgb {

namespace {

void require_positive_root(const IntPoly& f, const RealAlgebraic& x_plus) {
    if (f.is_zero() || sgn(f.trailing_constant()) == 0) throw std::invalid_argument("f(0) must be nonzero");
    if (compare(x_plus, Rational(0)) <= 0 || sign_at(f, x_plus) != 0)
        throw std::invalid_argument("x_plus must be a positive root of f");
}

CBox as_box(const RealAlgebraic& a) { return {a.interval(), RInterval(0)}; }

// Refines num and den until the quotient box lies inside one box of h.
template <class Den, class Refine, class ToBox>
RootBox locate_quotient(const IntPoly& h, RootBox num, Den den, Refine refine, ToBox to_box) {
    const auto hboxes = isolate_complex_roots(h);
    for (int it = 0; it <= kRefineCap; ++it) {
        CBox d = to_box(den);
        if (sgn(d.norm2().lo) > 0) {
            CBox q = num.box / d;
            for (const auto& hb : hboxes)
                if (q.subset_of(hb.box)) return hb;
        }
        num = num.refined();
        den = refine(den);
    }
    throw std::logic_error("quotient root could not be located");
}

// Multiplicity of a as a root of r.
unsigned root_multiplicity(IntPoly r, const RealAlgebraic& a) {
    unsigned k = 0;
    while (!r.is_zero() && sign_at(r, a) == 0) {
        ++k;
        r = derivative(r);
    }
    return k;
}

}  // namespace

bool has_root_outside(const IntPoly& f, const RealAlgebraic& x_plus) {
    require_positive_root(f, x_plus);
    const RealAlgebraic x2 = power(x_plus, 2);
    for (const auto& s : sqfree_decompose(f).factors) {
        IntPoly r = resultant_product(s.factor);
        for (const auto& root : isolate_real_roots(r)) {
            if (compare(root.value, Rational(0)) <= 0) continue;
            if (compare(root.value, x2) > 0) return true;
        }
    }
    return false;
}

CircleRoots roots_on_circle(const IntPoly& f, const RealAlgebraic& x_plus) {
    require_positive_root(f, x_plus);
    CircleRoots out;
    out.has_minus_xplus = sign_at(reflect(f), x_plus) == 0;
    RealAlgebraic x2 = power(x_plus, 2);
    for (const auto& s : sqfree_decompose(f).factors) {
        if (s.factor.degree() < 2) continue;
        const unsigned m = root_multiplicity(resultant_product(s.factor), x2);
        const unsigned n = sign_at(reflect(s.factor), x_plus) == 0 ? 1 : 0;
        const unsigned p = sign_at(s.factor, x_plus) == 0 ? 1 : 0;
        if (m < n + p || (m - n - p) % 2 != 0) throw std::logic_error("roots_on_circle: inconsistent census");
        const unsigned census = (m - n - p) / 2;
        if (census == 0) continue;
        std::vector<RootBox> boxes;
        for (auto& b : isolate_complex_roots(s.factor))
            if (b.upper()) boxes.push_back(b);
        for (int it = 0;; ++it) {
            if (it > kRefineCap) throw std::logic_error("roots_on_circle: refinement cap exhausted");
            std::vector<std::size_t> meeting;
            for (std::size_t i = 0; i < boxes.size(); ++i)
                if (!boxes[i].box.norm2().disjoint(x2.interval())) meeting.push_back(i);
            if (meeting.size() < census) throw std::logic_error("roots_on_circle: census not met");
            if (meeting.size() == census) {
                for (auto i : meeting) {
                    boxes[i].multiplicity = s.multiplicity;
                    out.complex_pairs.push_back(boxes[i]);
                }
                break;
            }
            for (auto i : meeting) boxes[i] = boxes[i].refined();
            x2 = x2.refined();
        }
    }
    return out;
}

RootBox quotient_root(const RootBox& num, const RealAlgebraic& den) {
    IntPoly h = squarefree_part(resultant_ratio(den.defining, num.defining));
    return locate_quotient(
        h, num, den, [](const RealAlgebraic& a) { return a.refined(); }, as_box);
}

RootBox quotient_root(const RootBox& num, const RootBox& den) {
    IntPoly h = squarefree_part(resultant_ratio(den.defining, num.defining));
    return locate_quotient(
        h, num, den, [](const RootBox& a) { return a.refined(); }, [](const RootBox& a) { return a.box; });
}

std::optional<unsigned> unity_order(const RootBox& w) {
    const IntPoly& h = w.defining;
    const auto d = static_cast<unsigned>(h.degree());
    // phi(m) >= sqrt(m / 2), so phi(m) <= d forces m <= 2 d^2.
    const unsigned top = 2 * d * d;
    for (unsigned m = 1; m <= top; ++m) {
        if (euler_phi(m) > d) continue;
        IntPoly g = gcd_primitive(h, cyclotomic(m));
        if (g.degree() < 1) continue;
        for (auto gb : isolate_complex_roots(g)) {
            for (int it = 0;; ++it) {
                if (it > kRefineCap) throw std::logic_error("unity_order: refinement cap exhausted");
                if (gb.box.subset_of(w.box)) return m;
                if (gb.box.disjoint(w.box)) break;
                gb = gb.refined();
            }
        }
    }
    return std::nullopt;
}

std::optional<unsigned> ratio_order(const IntPoly& f, const RootBox& z, const RealAlgebraic& x_plus, unsigned max_deg) {
    require_positive_root(f, x_plus);
    if (z.real) {
        if (sgn(z.box.re.hi) < 0) return 2u;
        return 1u;
    }
    const int hdeg = z.defining.degree() * x_plus.defining.degree();
    if (hdeg > static_cast<int>(max_deg)) throw std::invalid_argument("ratio_order: max_deg below the ratio polynomial degree");
    return unity_order(quotient_root(z, x_plus));
}

}  // namespace fdgb
