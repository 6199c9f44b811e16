#include "fdgb/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fdgb/complex_roots.hpp"
#include "fdgb/ip_search.hpp"
#include "fdgb/phi.hpp"
#include "fdgb/real_roots.hpp"
#include "fdgb/sigma_gb.hpp"
#include "fdgb/zx_ideal.hpp"

namespace fdgb {

namespace {

using json = nlohmann::ordered_json;

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    IntPoly parse() {
        IntPoly p = expr();
        skip();
        if (i_ < s_.size()) fail(std::string("unexpected character '") + s_[i_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    bool digit_next() {
        skip();
        return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
    }
    std::string digits() {
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        return s_.substr(start, i_ - start);
    }

    IntPoly expr() {
        IntPoly p = term();
        for (;;) {
            if (eat('+'))
                p += term();
            else if (eat('-'))
                p -= term();
            else
                return p;
        }
    }
    IntPoly term() {
        IntPoly p = unary();
        while (eat('*')) p *= unary();
        return p;
    }
    IntPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    IntPoly power() {
        IntPoly base = atom();
        if (!eat('^')) return base;
        if (!digit_next()) fail("expected a nonnegative integer exponent");
        const std::size_t at = i_;
        const std::string d = digits();
        if (d.size() > 7 || std::stoul(d) > kMaxExponent) throw ParseError("exponent exceeds 1000000", at);
        return pow(base, static_cast<unsigned>(std::stoul(d)));
    }
    IntPoly atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) return IntPoly::constant(Integer(digits()));
        if (c == 'x') {
            ++i_;
            return IntPoly::x();
        }
        if (c == '(') {
            ++i_;
            IntPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

json num(const Integer& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json num(const Rational& v) { return json(v.get_str()); }

json poly_json(const IntPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(num(c));
    return a;
}

struct Settings {
    bool json = false;
    bool trace = false;
    bool timing = false;
    unsigned cap = kDefaultConjectureCap;
    unsigned horizon = 0;
    unsigned long nodes = kDefaultNodeCap;
    unsigned delta = 0;
    unsigned max = 0;
    unsigned count = 0;
    std::string bound_kind;
    std::optional<std::string> ideal;
};

// Result payload kept both as JSON and as text lines.
struct Result {
    json body = json::object();
    std::vector<std::pair<std::string, std::string>> lines;
    std::vector<std::string> trace;
    int exit = 0;

    void put(const std::string& key, json j, std::string text) {
        body[key] = std::move(j);
        lines.emplace_back(key, std::move(text));
    }
    void kind(const std::string& k) { put("kind", k, k); }
    void poly(const std::string& key, const IntPoly& p) { put(key, poly_json(p), compact(p)); }
    void basis(const BinomialBasis& b) {
        json arr = json::array();
        std::string text;
        for (const auto& e : b.elements) {
            arr.push_back({{"plus", poly_json(e.plus)}, {"minus", poly_json(e.minus)}});
            if (!text.empty()) text += ", ";
            text += to_string(e);
        }
        put("D", b.D, std::to_string(b.D));
        put("certified", b.certified, b.certified ? "true" : "false");
        put("basis", std::move(arr), text);
    }
};

std::vector<IntPoly> parse_list(const std::string& s) {
    std::vector<IntPoly> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_poly(item));
    if (out.empty()) throw std::invalid_argument("empty polynomial list");
    return out;
}

IntPoly core_of(const IntPoly& p) { return normalize(p).core; }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
    return s;
}

std::string interval_text(const Rational& lo, const Rational& hi) { return "[" + lo.get_str() + ", " + hi.get_str() + "]"; }

Result ideal_result(const std::vector<IntPoly>& gens, const Settings& s, bool with_basis) {
    Result r;
    ZxGB zx = zx_groebner(gens);
    CriterionResult c = finite_sgb_criterion(zx, s.cap);
    json g = json::array();
    std::vector<std::string> gt;
    for (const auto& e : zx.elements) {
        g.push_back(poly_json(e));
        gt.push_back(compact(e));
    }
    if (with_basis && c.kind == CriterionKind::Finite)
        r.kind("Basis");
    else
        r.kind(to_string(c.kind));
    r.put("ideal_basis", std::move(g), join(gt, ", "));
    r.put("rule", c.rule, c.rule);
    if (c.witness) r.poly("witness", *c.witness);
    if (c.kind == CriterionKind::Unknown) {
        r.put("bound_used", c.bound_used, std::to_string(c.bound_used));
        r.exit = 2;
    }
    if (with_basis && c.witness) r.basis(multi_finite_gb(zx, *c.witness));
    return r;
}

Result run_one(const std::string& cmd, const std::string& input, const Settings& s) {
    Result r;
    if (cmd == "criterion") return ideal_result(parse_list(input), s, false);
    if (cmd == "gb" && s.ideal) return ideal_result(parse_list(input), s, true);

    const IntPoly p = parse_poly(input);
    if (cmd == "phi0") {
        r.kind(in_phi0(p) ? "InPhi0" : "NotInPhi0");
    } else if (cmd == "phi1") {
        Phi1Verdict v = membership_phi1(p);
        r.kind(to_string(v.kind));
        if (v.witness) r.poly("witness", *v.witness);
        if (v.reason) r.put("reason", to_string(*v.reason), to_string(*v.reason));
        r.put("step", v.step, v.step);
        if (v.delta) r.put("delta", *v.delta, std::to_string(*v.delta));
        if (v.fstar) r.poly("fstar", *v.fstar);
        r.trace = v.trace;
        if (v.kind == Phi1Kind::ConjecturalYes) r.exit = 2;
    } else if (cmd == "fstar") {
        if (s.delta == 0) throw std::invalid_argument("fstar needs --delta k with k >= 1");
        r.kind("Computed");
        r.poly("fstar", compute_fstar(core_of(p), s.delta));
    } else if (cmd == "delta") {
        const IntPoly f = core_of(p);
        auto roots = isolate_real_roots(f);
        if (roots.empty() || compare(roots.back().value, Rational(0)) <= 0)
            throw std::invalid_argument("delta: no positive real root");
        auto d = minimal_delta(f, roots.back().value);
        r.kind(d ? "Found" : "Absent");
        if (d) r.put("delta", *d, std::to_string(*d));
    } else if (cmd == "gb") {
        FiniteGbResult g = finite_gb(p, s.cap);
        r.kind(g.kind == GbKind::Basis ? "Basis" : g.kind == GbKind::Infinite ? "Infinite" : "Undecided");
        r.put("phi1", to_string(g.verdict.kind), to_string(g.verdict.kind));
        if (g.basis) r.basis(*g.basis);
        r.trace = g.verdict.trace;
        if (g.kind == GbKind::Undecided) r.exit = 2;
    } else if (cmd == "witness") {
        auto w = find_witness(core_of(p), s.max, s.nodes);
        r.kind(w ? "Found" : "NotFound");
        if (w) {
            r.poly("witness", w->g);
            r.put("degree", w->m_min, std::to_string(w->m_min));
        } else {
            r.exit = 2;
        }
        if (w && !w->open_degrees.empty()) {
            std::vector<std::string> t;
            for (unsigned d : w->open_degrees) t.push_back(std::to_string(d));
            r.put("open_degrees", w->open_degrees, join(t, " "));
        }
    } else if (cmd == "bound") {
        const IntPoly f = core_of(p);
        json b = json::object();
        std::string text;
        if (s.bound_kind == "series") {
            SeriesBound sb = series_lower_bound(f, s.horizon);
            b["series"] = sb.bound;
            b["conclusive"] = sb.conclusive;
            text = "series=" + std::to_string(sb.bound) + (sb.conclusive ? "" : " (inconclusive)");
            if (!sb.conclusive) r.exit = 2;
        } else if (s.bound_kind == "complex") {
            unsigned c = complex_lower_bound(f);
            b["complex"] = c;
            text = "complex=" + std::to_string(c);
        } else if (s.bound_kind == "quadratic") {
            unsigned q = quadratic_min_degree(f);
            b["quadratic"] = q;
            text = "quadratic=" + std::to_string(q);
            if (sgn(f[1]) < 0) {
                json tr = json::array();
                for (const auto& d : delta_trace(f).values) tr.push_back(num(d));
                b["delta_trace"] = tr;
            }
        } else if (s.bound_kind == "polya") {
            PolyaData pd = polya_exponent(f);
            b["N_f"] = pd.N_f;
            b["lambda"] = num(pd.lambda_lower);
            b["lambda_exact"] = pd.lambda_exact;
            b["L"] = num(pd.L);
            text = "N_f=" + std::to_string(pd.N_f) + " lambda" + (pd.lambda_exact ? "=" : ">=") + pd.lambda_lower.get_str();
        } else {
            throw std::invalid_argument("bound kind must be series, complex, quadratic or polya");
        }
        r.kind("Bound");
        r.put("bounds", std::move(b), text);
    } else if (cmd == "stream") {
        auto st = infinite_gb_stream(core_of(p), s.count);
        r.kind("Stream");
        json a = json::array();
        std::vector<std::string> t;
        for (const auto& e : st) {
            a.push_back(poly_json(e));
            t.push_back(compact(e));
        }
        r.put("elements", std::move(a), join(t, ", "));
    } else if (cmd == "roots") {
        if (p.is_constant()) throw std::invalid_argument("roots: polynomial must be nonconstant");
        json real = json::array(), cx = json::array();
        std::vector<std::string> rt, ct;
        for (const auto& rr : isolate_real_roots(p)) {
            real.push_back({{"lo", num(rr.value.lo)}, {"hi", num(rr.value.hi)}, {"multiplicity", rr.multiplicity}});
            rt.push_back(interval_text(rr.value.lo, rr.value.hi) + (rr.multiplicity > 1 ? "^" + std::to_string(rr.multiplicity) : ""));
        }
        for (const auto& b : isolate_complex_roots(p)) {
            if (b.real) continue;
            cx.push_back({{"re", {num(b.box.re.lo), num(b.box.re.hi)}},
                          {"im", {num(b.box.im.lo), num(b.box.im.hi)}},
                          {"multiplicity", b.multiplicity}});
            ct.push_back(interval_text(b.box.re.lo, b.box.re.hi) + "+i" + interval_text(b.box.im.lo, b.box.im.hi) +
                         (b.multiplicity > 1 ? "^" + std::to_string(b.multiplicity) : ""));
        }
        r.kind("Isolated");
        r.put("real", std::move(real), join(rt, " "));
        r.put("complex", std::move(cx), join(ct, " "));
    } else {
        throw std::invalid_argument("unknown command " + cmd);
    }
    return r;
}

struct Emitted {
    std::string text;
    std::string error;
    int exit;
};

Emitted process(const std::string& cmd, const std::string& input, const Settings& s, bool batch) {
    json doc;
    doc["command"] = cmd;
    doc["input"] = input;
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    std::string error;
    try {
        r = run_one(cmd, input, s);
    } catch (const std::exception& e) {
        error = e.what();
        r.exit = 1;
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (s.json) {
        if (error.empty())
            doc["result"] = r.body;
        else
            doc["error"] = error;
        if (s.trace && error.empty()) doc["trace"] = r.trace;
        if (s.timing) doc["timing_ms"] = ms;
        doc["exit"] = r.exit;
        return {doc.dump(), error, r.exit};
    }
    std::vector<std::string> parts;
    if (!error.empty() && batch) parts.push_back("error: " + error);
    for (const auto& [k, v] : r.lines) parts.push_back(k + ": " + v);
    if (s.trace && error.empty()) parts.push_back("trace: " + join(r.trace, " "));
    if (s.timing) {
        std::ostringstream t;
        t.precision(3);
        t << std::fixed << ms;
        parts.push_back("time_ms: " + t.str());
    }
    if (batch) return {input + "\t" + join(parts, "; "), error, r.exit};
    return {join(parts, "\n"), error, r.exit};
}

int worse(int a, int b) {
    if (a == 1 || b == 1) return 1;
    return std::max(a, b);
}

}  // namespace

IntPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

std::string compact(const IntPoly& p) {
    std::string t = to_string(p);
    std::erase(t, ' ');
    return t;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite difference Groebner bases of binomial ideals"};
    app.name("fdgb");
    app.require_subcommand(1);
    app.fallthrough();
    Settings s;
    std::string batch;
    app.add_flag("--json", s.json, "JSON output");
    app.add_flag("--trace", s.trace, "Include the decision path");
    app.add_flag("--timing", s.timing, "Report wall time");
    app.add_option("--batch", batch, "One input per line");
    app.add_option("--cap", s.cap, "Degree cap for witness searches")->capture_default_str();
    app.add_option("--horizon", s.horizon, "Series horizon (0: 4 deg^2)")->capture_default_str();
    app.add_option("--nodes", s.nodes, "Node cap of the integer search")->capture_default_str();

    std::string input;
    auto with_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "Polynomial expression");
        return sub;
    };
    with_input(app.add_subcommand("phi0", "Membership in Phi0"));
    with_input(app.add_subcommand("phi1", "Membership in Phi1"));
    with_input(app.add_subcommand("fstar", "Generator of (f) in Z[x^delta]"))->add_option("--delta", s.delta)->required();
    with_input(app.add_subcommand("delta", "Minimal delta for the circle roots"));
    auto* gb = with_input(app.add_subcommand("gb", "Finite sigma-Groebner basis"));
    std::string ideal;
    gb->add_option("--ideal", ideal, "Comma separated generators");
    with_input(app.add_subcommand("witness", "Least-degree monic cofactor"))->add_option("--max", s.max)->required();
    auto* bound = app.add_subcommand("bound", "Lower bounds and exponents");
    bound->add_option("kind", s.bound_kind)->required()->check(CLI::IsMember({"series", "complex", "quadratic", "polya"}));
    bound->add_option("input", input, "Polynomial expression");
    with_input(app.add_subcommand("stream", "Infinite basis elements"))->add_option("--count", s.count)->required();
    with_input(app.add_subcommand("criterion", "Finiteness criterion for an ideal p1,p2,..."));
    with_input(app.add_subcommand("roots", "Isolate real and complex roots"));

    std::vector<std::string> argv_store{"fdgb"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "gb" && !ideal.empty()) {
        s.ideal = ideal;
        if (input.empty()) input = ideal;
    }
    if (batch.empty()) {
        if (input.empty()) {
            err << "error: missing input polynomial\n";
            return 1;
        }
        Emitted e = process(cmd, input, s, false);
        if (!e.text.empty()) out << e.text << '\n';
        if (!e.error.empty()) err << "error: " << e.error << '\n';
        return e.exit;
    }

    std::ifstream in(batch);
    if (!in) {
        err << "error: cannot read " << batch << '\n';
        return 1;
    }
    int code = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') {
            out << (s.json ? json{{"input", line}, {"skipped", true}}.dump() : line) << '\n';
            continue;
        }
        Emitted e = process(cmd, line.substr(first), s, true);
        out << e.text << '\n';
        if (!e.error.empty()) err << "error: " << line.substr(first) << ": " << e.error << '\n';
        code = worse(code, e.exit);
    }
    return code;
}

}  // namespace fdgb
