#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fdgb/cli.hpp"
#include "fdgb/ip_search.hpp"
#include "fdgb/phi.hpp"
#include "fdgb/sigma_gb.hpp"
#include "fdgb/zx_ideal.hpp"

namespace py = pybind11;
using namespace fdgb;

namespace {

// Polynomials cross the boundary as coefficient lists, lowest degree first;
// strings are parsed with the CLI grammar.
IntPoly to_poly(const py::object& o) {
    if (py::isinstance<py::str>(o)) return parse_poly(o.cast<std::string>());
    std::vector<Integer> c;
    for (auto v : o) c.emplace_back(py::str(v).cast<std::string>());
    return IntPoly(std::move(c));
}

py::int_ to_py(const Integer& v) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10))); }

py::object to_py(const Rational& v) {
    return py::module_::import("fractions").attr("Fraction")(to_py(Integer(v.get_num())), to_py(Integer(v.get_den())));
}

py::list to_py(const IntPoly& p) {
    py::list l;
    for (const auto& c : p.coeffs()) l.append(to_py(c));
    return l;
}

py::dict verdict_dict(const Phi1Verdict& v) {
    py::dict d;
    d["kind"] = to_string(v.kind);
    d["witness"] = v.witness ? py::object(to_py(*v.witness)) : py::none();
    d["reason"] = v.reason ? py::object(py::str(to_string(*v.reason))) : py::none();
    d["step"] = v.step;
    d["delta"] = v.delta ? py::object(py::int_(*v.delta)) : py::none();
    d["fstar"] = v.fstar ? py::object(to_py(*v.fstar)) : py::none();
    d["core"] = to_py(v.core);
    d["trace"] = v.trace;
    return d;
}

py::dict basis_dict(const BinomialBasis& b) {
    py::list el, text;
    for (const auto& e : b.elements) {
        el.append(py::make_tuple(to_py(e.plus), to_py(e.minus)));
        text.append(to_string(e));
    }
    py::dict d;
    d["D"] = b.D;
    d["certified"] = b.certified;
    d["elements"] = el;
    d["text"] = text;
    return d;
}

std::vector<IntPoly> to_polys(const py::iterable& it) {
    std::vector<IntPoly> out;
    for (auto o : it) out.push_back(to_poly(py::reinterpret_borrow<py::object>(o)));
    return out;
}

}  // namespace

PYBIND11_MODULE(fdgb, m) {
    m.doc() = "Finite difference Groebner bases of univariate binomial ideals";

    m.def("parse_poly", [](const std::string& s) { return to_py(parse_poly(s)); });
    m.def("to_text", [](const py::object& f) { return compact(to_poly(f)); });
    m.def("in_phi0", [](const py::object& f) { return in_phi0(to_poly(f)); });
    m.def("phi1", [](const py::object& f) { return verdict_dict(membership_phi1(to_poly(f))); });
    m.def("compute_fstar", [](const py::object& f, unsigned delta) { return to_py(compute_fstar(to_poly(f), delta)); },
          py::arg("f"), py::arg("delta"));

    m.def(
        "find_witness",
        [](const py::object& f, unsigned m_max, unsigned long nodes) -> py::object {
            auto w = find_witness(to_poly(f), m_max, nodes);
            if (!w) return py::none();
            py::dict d;
            d["witness"] = to_py(w->g);
            d["degree"] = w->m_min;
            d["open_degrees"] = w->open_degrees;
            return d;
        },
        py::arg("f"), py::arg("m_max"), py::arg("node_cap") = kDefaultNodeCap);

    m.def(
        "series_lower_bound",
        [](const py::object& f, unsigned horizon) {
            auto s = series_lower_bound(to_poly(f), horizon);
            return py::make_tuple(s.bound, s.conclusive);
        },
        py::arg("f"), py::arg("horizon") = 0);
    m.def("complex_lower_bound", [](const py::object& f) { return complex_lower_bound(to_poly(f)); });
    m.def("quadratic_min_degree", [](const py::object& f) { return quadratic_min_degree(to_poly(f)); });
    m.def("polya_exponent", [](const py::object& f) {
        auto p = polya_exponent(to_poly(f));
        py::dict d;
        d["N_f"] = p.N_f;
        d["lambda"] = to_py(p.lambda_lower);
        d["lambda_exact"] = p.lambda_exact;
        d["L"] = to_py(p.L);
        return d;
    });

    m.def(
        "finite_gb",
        [](const py::object& f, unsigned cap) {
            auto r = finite_gb(to_poly(f), cap);
            py::dict d;
            d["kind"] = r.kind == GbKind::Basis ? "Basis" : r.kind == GbKind::Infinite ? "Infinite" : "Undecided";
            d["basis"] = r.basis ? py::object(basis_dict(*r.basis)) : py::none();
            d["verdict"] = verdict_dict(r.verdict);
            return d;
        },
        py::arg("f"), py::arg("cap") = kDefaultConjectureCap);
    m.def(
        "gb_truncated", [](const py::object& f, unsigned D) { return basis_dict(gb_truncated(to_poly(f), D)); },
        py::arg("f"), py::arg("D"));
    m.def("infinite_gb_stream", [](const py::object& f, unsigned count) {
        py::list l;
        for (const auto& s : infinite_gb_stream(to_poly(f), count)) l.append(to_py(s));
        return l;
    });

    m.def("zx_groebner", [](const py::iterable& gens) {
        py::list l;
        for (const auto& g : zx_groebner(to_polys(gens)).elements) l.append(to_py(g));
        return l;
    });
    m.def(
        "finite_sgb_criterion",
        [](const py::iterable& gens, unsigned cap) {
            auto b = zx_groebner(to_polys(gens));
            auto c = finite_sgb_criterion(b, cap);
            py::dict d;
            d["kind"] = to_string(c.kind);
            d["witness"] = c.witness ? py::object(to_py(*c.witness)) : py::none();
            d["rule"] = c.rule;
            d["bound_used"] = c.bound_used;
            return d;
        },
        py::arg("gens"), py::arg("cap") = kDefaultConjectureCap);
    m.def(
        "multi_finite_gb",
        [](const py::iterable& gens, const py::object& witness) {
            return basis_dict(multi_finite_gb(zx_groebner(to_polys(gens)), to_poly(witness)));
        },
        py::arg("gens"), py::arg("witness"));

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
