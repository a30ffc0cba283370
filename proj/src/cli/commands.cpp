#include "msurf/cli/commands.hpp"

#include "msurf/cremona/cremona.hpp"
#include "msurf/errors.hpp"
#include "msurf/exactalg/rings.hpp"
#include "msurf/hypersurface/hypersurface.hpp"
#include "msurf/exactalg/linalg.hpp"
#include "msurf/lattice/lattice.hpp"
#include "msurf/monoidal/monoidal.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

namespace msurf::cli {

using nlohmann::json;

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    long long micros() const {
        return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

Check make_check(std::string name, bool ok, std::string certifies, json witness = json::object()) {
    return {std::move(name), ok ? "pass" : "fail", std::move(certifies), std::move(witness)};
}

Check skipped(std::string name, std::string certifies, std::string reason) {
    return {std::move(name), "skip", std::move(certifies), json{{"reason", std::move(reason)}}};
}

json header(const std::string& command, const JobOptions& opt) {
    json t;
    t["tool"] = {{"name", "msurf"}, {"version", kToolVersion}};
    t["command"] = command;
    if (!opt.input_label.empty()) t["input"] = {{"path", opt.input_label}, {"digest", digest(opt.input_bytes)}};
    return t;
}

Report finish(json tree, std::vector<Check> checks, const Timer& timer, const JobOptions& opt) {
    std::sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
    json arr = json::array();
    bool failed = false;
    for (const auto& c : checks) {
        arr.push_back({{"name", c.name}, {"status", c.status}, {"certifies", c.certifies}, {"witness", c.witness}});
        failed = failed || c.status == "fail";
    }
    tree["checks"] = std::move(arr);
    tree["status"] = failed ? "fail" : "pass";
    if (opt.timing) tree["timing_us"] = timer.micros();
    return {std::move(tree), failed ? ExitStatus::check_failed : ExitStatus::ok};
}

std::string str(const MultiPoly& p) { return p.to_string(); }

json poly_list(const std::vector<MultiPoly>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(str(p));
    return a;
}

std::string bracket(const std::vector<MultiPoly>& ps) {
    std::string s = "[";
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + str(ps[i]);
    return s + "]";
}

json factorization(const SquarefreeDecomposition& sq) {
    json a = json::array();
    for (const auto& f : sq.factors) a.push_back({{"factor", str(f.factor)}, {"multiplicity", f.multiplicity}});
    return {{"unit", sq.unit.to_string()}, {"factors", a}};
}

int root_count(const MultiPoly& locus) { return locus.is_zero() ? -1 : locus.total_degree(); }

json sampled_witness(const InvolutionVerdict& v) {
    json w = {{"method", v.method == InvolutionMethod::symbolic ? "symbolic" : "sampled"}, {"detail", v.detail}};
    if (v.method == InvolutionMethod::sampled) {
        w["points_passed"] = v.points_passed;
        w["points_tried"] = v.points_tried;
        w["resampled"] = v.resampled;
    }
    return w;
}

json invariance_witness(const InvarianceToken& t) {
    if (t.divisible) return {{"quotient_degree", t.quotient_degree}};
    return {{"remainder_leading_term", t.witness}};
}

// Test hook: breaks the map without changing its degree.
void corrupt_map(RationalMap& m) {
    const auto& vars = m.components[0].vars_ptr();
    Exponent e(vars->size(), 0);
    e.back() = static_cast<unsigned>(m.degree());
    m.components[2] += MultiPoly::monomial(vars, e);
}

}  // namespace

std::string digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

Report rejection_report(const std::string& command, const std::string& invariant, const std::string& message,
                        const JobOptions& opt) {
    json t = header(command, opt);
    t["status"] = "rejected";
    t["rejection"] = {{"invariant", invariant}, {"message", message}};
    return {std::move(t), ExitStatus::input_error};
}

namespace {

Extraction extract(const InputSpec& spec) {
    if (!spec.line) throw Rejection("input", "a surface file needs 'line'");
    return submonoidal_from_polynomial(spec.F, (*spec.line)[0], (*spec.line)[1]);
}

json surface_summary(const InputSpec& spec, const Extraction& ex) {
    const auto& s = ex.surface;
    json forms = {{"A", str(s.A)}, {"B", str(s.B)}, {"C", str(s.C)},
                  {"D", str(s.D)}, {"E", str(s.E)}, {"F", str(s.F)}};
    json n = json::array();
    for (const auto& row : ex.normalization) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.to_string());
        n.push_back(r);
    }
    return {{"name", spec.name}, {"field", spec.field.to_string()}, {"degree", s.d}, {"forms", forms},
            {"normalization", n}};
}

}  // namespace

namespace {

// Gamma of multiplicity d-1: the conic bundle degenerates, so report the
// monoidal invariants instead.
Report analyze_monoidal(const InputSpec& spec, const JobOptions& opt, const Timer& timer) {
    json t = header("analyze", opt);
    const MultiPoly f = spec.F.rename_into(p3_vars());
    const FieldMatrix N = line_normalization((*spec.line)[0].rename_into(p3_vars()), (*spec.line)[1].rename_into(p3_vars()));
    const MultiPoly g = linear_substitution(f, *inverse(N));
    const int d = g.total_degree();
    MultiPoly A(p3_vars()), B(p3_vars()), C(p3_vars());
    for (const auto& [e, c] : g.terms()) {
        const Exponent base{e[0], e[1], 0, 0};
        if (e[2] + e[3] == 0) A.add_term(base, c);
        else if (e[2] == 1 && e[3] == 0) B.add_term(base, c);
        else if (e[2] == 0 && e[3] == 1) C.add_term(base, c);
        else throw Rejection("multiplicity", "unexpected monomial in a monoidal equation");
    }
    const MonoidalSurface s = monoidal_validate(A, B, C, d);
    std::vector<Check> checks;
    json res;
    res["surface"] = {{"name", spec.name}, {"field", spec.field.to_string()}, {"degree", d}, {"kind", "monoidal"},
                      {"forms", {{"A", str(s.A)}, {"B", str(s.B)}, {"C", str(s.C)}}}};
    checks.push_back(make_check("equation reconstruction", s.equation() == g, "A, B, C rebuild the normalized equation"));
    const MonoidalSigma sg = sigma_curve_monoidal(s);
    res["sigma"] = {{"section", bracket({sg.section_y1, sg.section_y2})},
                    {"fiber_gcd", str(sg.fiber_gcd)},
                    {"projection_degree", sg.projection_degree}};
    const MonoidalPinch pc = pinch_divisor_monoidal(s);
    res["pinch"] = {{"wronskian", str(pc.wronskian)}, {"degree", pc.degree}, {"squarefree", pc.squarefree},
                    {"common_factor", str(pc.common_factor)}};
    const int k = pc.common_factor.total_degree();
    const int expected = 2 * (d - 1 - k) - 2;
    checks.push_back(make_check("pinch degree", pc.degree == expected, "the Wronskian of B, C has degree 2(d-1-k)-2",
                                {{"degree", pc.degree}, {"expected", expected}}));
    if (d >= 4) res["moduli_dimension"] = moduli_dimension(SurfaceKind::monoidal, d);
    t["results"] = std::move(res);
    return finish(std::move(t), std::move(checks), timer, opt);
}

}  // namespace

Report cmd_analyze(const InputSpec& spec, const JobOptions& opt) {
    Timer timer;
    json t = header("analyze", opt);
    Extraction ex;
    try {
        ex = extract(spec);
    } catch (const Rejection& r) {
        if (r.invariant() != "monoidal") throw;
        return analyze_monoidal(spec, opt, timer);
    }
    const SubmonoidalSurface& s = ex.surface;
    const int d = s.d;
    std::vector<Check> checks;
    json res;
    res["surface"] = surface_summary(spec, ex);

    checks.push_back(make_check("equation reconstruction", s.equation() == ex.transformed,
                                "the blocks A..F rebuild the normalized equation"));

    const MultiPoly P = discriminant_P(s);
    const MultiPoly R = small_discriminant_R(s);
    res["P"] = str(P);
    res["R"] = str(R);
    checks.push_back(make_check("discriminant degree", !P.is_zero() && P.total_degree() == 3 * d - 4,
                                "P is a binary form of degree 3d-4",
                                {{"degree", P.total_degree()}, {"expected", 3 * d - 4}}));
    checks.push_back(make_check("small discriminant degree", !R.is_zero() && R.total_degree() == 2 * (d - 2),
                                "R = E^2 - DF is a binary form of degree 2(d-2)",
                                {{"degree", R.total_degree()}, {"expected", 2 * (d - 2)}}));

    const FiberReport f = classify_fibers(s);
    const Verdict v = check_nondegenerate(s);
    bool square = true;
    for (const auto& fac : f.P_factors.factors) square = square && fac.multiplicity % 2 == 0;
    res["P_factorization"] = factorization(f.P_factors);
    res["P_is_square"] = square;
    res["fibers"] = {{"s", {f.s1, f.s2, f.s3}},
                     {"nodes", f.nodes},
                     {"double_line_locus", str(f.third_kind_locus)},
                     {"high_multiplicity", f.high_multiplicity},
                     {"R_squarefree", f.R_squarefree}};
    res["nondegenerate"] = {
        {"verdict", v.pass}, {"passed", v.passed}, {"failed", v.failed}, {"unchecked", v.unchecked}};
    const int census = f.s1 + 2 * f.s2 + 2 * f.s3;
    if (v.pass)
        checks.push_back(make_check("fiber census", census == 3 * d - 4, "s1 + 2 s2 + 2 s3 = 3d-4",
                                    {{"sum", census}, {"expected", 3 * d - 4}}));
    else
        checks.push_back(skipped("fiber census", "s1 + 2 s2 + 2 s3 = 3d-4", "surface is degenerate"));
    checks.push_back(make_check("node bound", f.nodes <= 3 * d - 4, "at most 3d-4 nodes",
                                {{"nodes", f.nodes}, {"bound", 3 * d - 4}}));

    if (!R.is_zero()) {
        const MultiPoly e = eckardt_locus(s);
        res["eckardt"] = {{"locus", str(e)}, {"points", root_count(e)}};
    } else {
        res["eckardt"] = nullptr;
    }
    if (d >= 4) {
        const PinchReport p = pinch_divisor(s);
        res["pinch"] = {{"divisor", str(p.divisor)}, {"degree", p.degree}, {"common_factor", str(p.common_factor)}};
    } else {
        res["pinch"] = nullptr;
    }
    t["results"] = std::move(res);
    return finish(std::move(t), std::move(checks), timer, opt);
}

Report cmd_involutions(const InputSpec& spec, const JobOptions& opt) {
    Timer timer;
    json t = header("involutions", opt);
    t["mode"] = opt.mode;
    t["seed"] = opt.seed;
    const Extraction ex = extract(spec);
    const SubmonoidalSurface& s = ex.surface;
    const MultiPoly F = s.equation();
    std::vector<Check> checks;
    json res;
    res["surface"] = surface_summary(spec, ex);

    const SatelliteCurve sat = satellite_curve(s);
    res["satellite"] = {{"parameterization", bracket({sat.forms.begin(), sat.forms.end()})},
                        {"cancelled", str(sat.cancelled)},
                        {"degree", sat.degree},
                        {"generic_degree", sat.generic_degree}};

    RationalMap th = theta(s);
    if (opt.corrupt) corrupt_map(th);
    const RationalMap thr = th.reduce();
    res["theta"] = {{"degree", th.degree()},
                    {"common_factor", str(th.common_factor())},
                    {"components", poly_list(thr.components)},
                    {"reduced_degree", thr.degree()}};
    const InvarianceToken inv = verify_surface_invariance(th, F);
    checks.push_back(make_check("theta invariance", inv.divisible, "F divides F(Theta)", invariance_witness(inv)));
    const InvolutionMethod method = opt.mode == "sampled" ? InvolutionMethod::sampled : InvolutionMethod::symbolic;
    const InvolutionVerdict tv = verify_involution(th, method, opt.seed);
    checks.push_back(make_check("theta involution", tv.pass, "Theta composed with itself is the identity",
                                sampled_witness(tv)));

    const RationalMap tp = theta_prime(s);
    const RationalMap tpr = tp.reduce();
    res["theta_prime"] = {
        {"degree", tp.degree()}, {"components", poly_list(tpr.components)}, {"reduced_degree", tpr.degree()}};
    const CrossMinorReport cm = verify_cross_minors(tp, F);
    checks.push_back(make_check("theta prime fixes the surface", cm.pass(),
                                "every cross-minor x_i' x_j - x_j' x_i is divisible by F",
                                {{"checked", cm.checked}, {"divisible", cm.divisible}}));
    const InvolutionVerdict tpv = verify_involution(tp, InvolutionMethod::sampled, opt.seed);
    checks.push_back(make_check("theta prime involution", tpv.pass, "Theta' composed with itself is the identity",
                                sampled_witness(tpv)));
    const InvolutionVerdict com = verify_commute(th, tp, opt.seed);
    checks.push_back(make_check("commutation", com.pass, "Theta and Theta' commute", sampled_witness(com)));

    t["results"] = std::move(res);
    return finish(std::move(t), std::move(checks), timer, opt);
}

namespace {

json class_json(const LatticeClass& c) { return c.c; }

// Explicit enumeration is cheap up to here; beyond, counts come from binomials.
constexpr int kEnumerateUpTo = 7;

}  // namespace

Report cmd_lattice(int d, const JobOptions& opt) {
    Timer timer;
    json t = header("lattice", opt);
    if (d < 3 || d > 12) {
        Report r = rejection_report("lattice", "range", "d must lie in 3..12, got " + std::to_string(d), opt);
        return r;
    }
    t["degree"] = d;
    std::vector<Check> checks;
    json res;
    const StandardClasses sc = standard_classes(d);
    res["rank"] = 3 * d - 2;
    res["classes"] = {{"H", class_json(sc.H)}, {"Sigma", class_json(sc.Sigma)}, {"K", class_json(sc.K)},
                      {"fiber", class_json(sc.fiber)}};
    const long ss = intersection_number(sc.Sigma, sc.Sigma), kk = intersection_number(sc.K, sc.K);
    res["intersections"] = {{"H.H", intersection_number(sc.H, sc.H)},
                            {"H.Sigma", intersection_number(sc.H, sc.Sigma)},
                            {"Sigma.Sigma", ss},
                            {"K.K", kk},
                            {"K.H", intersection_number(sc.K, sc.H)},
                            {"fiber.fiber", intersection_number(sc.fiber, sc.fiber)}};
    checks.push_back(make_check("Sigma squared", ss == d - 4, "Sigma^2 = d-4", {{"value", ss}}));
    checks.push_back(make_check("canonical squared", kk == 12 - 3 * d, "K^2 = 12-3d", {{"value", kk}}));

    const unsigned long long expected = 1ULL << (3 * d - 5);
    const unsigned long long binom = even_binomial_sum(d);
    checks.push_back(make_check("even binomial sum", binom == expected, "sum of C(3d-4, 2n) is 2^(3d-5)",
                                {{"sum", binom}, {"expected", expected}}));

    json census = json::object();
    if (d <= kEnumerateUpTo) {
        const SpecialSectionCensus c = enumerate_special_sections(d);
        bool shapes_ok = true;
        for (const auto& [n, list] : c.by_n) {
            census[std::to_string(n)] = list.size();
            for (const auto& sct : list) {
                SpecialSection back;
                shapes_ok = shapes_ok && as_special_section(sct.cls, back) && back.n == n;
            }
        }
        res["census"] = {{"method", "enumeration"}, {"by_n", census}, {"total", c.total()}};
        checks.push_back(make_check("census total", c.total() == expected, "2^(3d-5) special sections",
                                    {{"total", c.total()}, {"expected", expected}}));
        checks.push_back(make_check("section classes", shapes_ok, "every enumerated class has the section shape"));
        if (d % 2 == 0) {
            std::size_t pairs_ok = 0, degree_zero = 0, tau_ok = 0;
            for (const auto& [n, list] : c.by_n)
                for (const auto& sct : list) {
                    const SpecialSection dual = dual_section(sct, d);
                    pairs_ok += dual_section(dual, d).cls == sct.cls &&
                                intersection_number(sct.cls, dual.cls) == intersection_number(dual.cls, sct.cls);
                    degree_zero += dual.n == 0;
                    tau_ok += tau_action(sct.cls) == dual.cls;
                }
            res["duality"] = {{"sections", c.total()}, {"degree_zero_duals", degree_zero}};
            checks.push_back(make_check("duality involution", pairs_ok == c.total(), "the dual of the dual is E",
                                        {{"checked", c.total()}, {"holding", pairs_ok}}));
            checks.push_back(make_check("degree-zero dual", degree_zero == 1, "exactly one section has a degree-0 dual",
                                        {{"count", degree_zero}}));
            checks.push_back(make_check("tau maps sections to duals", tau_ok == c.total(), "tau(E) = dual(E)",
                                        {{"checked", c.total()}, {"holding", tau_ok}}));
        }
    } else {
        unsigned long long total = 0;
        const int k = 3 * d - 4;
        for (int n = 0; 2 * n <= k; ++n) {
            unsigned long long b = 1;
            for (int i = 0; i < 2 * n; ++i) b = b * static_cast<unsigned long long>(k - i) / static_cast<unsigned long long>(i + 1);
            census[std::to_string(n)] = b;
            total += b;
        }
        res["census"] = {{"method", "binomial"}, {"by_n", census}, {"total", total}};
        checks.push_back(make_check("census total", total == expected, "2^(3d-5) special sections",
                                    {{"total", total}, {"expected", expected}}));
    }

    if (d % 2 == 0) {
        // tau on the basis: linear, so the basis decides involution and isometry
        bool inv = true, iso = true;
        const int rank = 3 * d - 2;
        for (int i = 0; i < rank; ++i) {
            const LatticeClass ei = LatticeClass::basis(d, i);
            inv = inv && tau_action(tau_action(ei)) == ei;
            for (int j = 0; j < rank; ++j) {
                const LatticeClass ej = LatticeClass::basis(d, j);
                iso = iso && intersection_number(tau_action(ei), tau_action(ej)) == intersection_number(ei, ej);
            }
        }
        checks.push_back(make_check("tau involution", inv, "tau^2 = id"));
        checks.push_back(make_check("tau isometry", iso, "tau preserves the intersection form"));
        checks.push_back(make_check("tau fixes H", tau_action(sc.H) == sc.H, "tau(H) = H"));
    } else {
        res["duality"] = nullptr;
    }
    t["results"] = std::move(res);
    return finish(std::move(t), std::move(checks), timer, opt);
}

Report cmd_hypersurface(const InputSpec& spec, const JobOptions& opt) {
    Timer timer;
    json t = header("hypersurface", opt);
    t["seed"] = opt.seed;
    if (!spec.gamma_codim) throw Rejection("input", "a hypersurface file needs 'gamma_codim'");
    const SubmonoidalHypersurface h = hypersurface_from_polynomial(spec.F, *spec.gamma_codim);
    const MultiPoly F = h.equation();
    std::vector<Check> checks;
    json res;
    res["hypersurface"] = {{"name", spec.name}, {"field", spec.field.to_string()}, {"n", h.n}, {"m", h.m},
                           {"d", h.d}};
    json fm = json::array();
    for (const auto& row : fiber_matrix(h)) fm.push_back(poly_list(row));
    res["fiber_matrix"] = fm;
    checks.push_back(make_check("equation reconstruction", F == spec.F, "the blocks A, l, q rebuild F"));

    const SatelliteParameterization sat = satellite_parameterization(h);
    res["satellite"] = {{"parameterization", bracket(sat.forms)},
                        {"cancelled", str(sat.cancelled)},
                        {"raw_degree", sat.raw_degree},
                        {"reduced_degree", sat.reduced_degree},
                        {"expected_raw_degree", sat.expected_raw_degree}};
    checks.push_back(make_check("raw satellite degree", sat.raw_degree == sat.expected_raw_degree,
                                "raw satellite degree is (n+2-m)(d-2)+1",
                                {{"raw", sat.raw_degree}, {"expected", sat.expected_raw_degree}}));
    res["dimension_bound"] = subspace_dimension_bound(h.n, h.m, h.d);
    if (h.m == h.n + 1) {
        const MultiPoly polar = point_polar(h);
        res["point_polar"] = str(polar);
        checks.push_back(make_check("polar coincidence", polar.substitute(sat.forms).is_zero(),
                                    "the satellite lies on the first polar of Gamma",
                                    {{"polar_degree", polar.total_degree()}}));
    }
    const auto m = static_cast<std::size_t>(h.m);
    RationalMap th = theta_general_reduced(h);
    if (opt.corrupt) corrupt_map(th);
    res["theta_degree"] = theta_general(h).degree();
    res["theta_reduced_degree"] = th.degree();
    const InvarianceToken inv = verify_surface_invariance(th, F);
    checks.push_back(make_check("theta invariance", inv.divisible, "F divides F(Theta)", invariance_witness(inv)));
    const InvolutionVerdict tv = verify_involution(th, InvolutionMethod::sampled, opt.seed, 20, m);
    checks.push_back(make_check("theta involution", tv.pass, "Theta composed with itself is the identity",
                                sampled_witness(tv)));
    const RationalMap tp = theta_prime_general(h);
    res["theta_prime_degree"] = tp.degree();
    const CrossMinorReport cm = verify_cross_minors(tp, F);
    checks.push_back(make_check("theta prime fixes the hypersurface", cm.pass(),
                                "every cross-minor x_i' x_j - x_j' x_i is divisible by F",
                                {{"checked", cm.checked}, {"divisible", cm.divisible}}));
    const InvolutionVerdict tpv = verify_involution(tp, InvolutionMethod::sampled, opt.seed, 20, m);
    checks.push_back(make_check("theta prime involution", tpv.pass, "Theta' composed with itself is the identity",
                                sampled_witness(tpv)));
    t["results"] = std::move(res);
    return finish(std::move(t), std::move(checks), timer, opt);
}

std::string sample_surface_file(int d, std::uint64_t seed) {
    const SubmonoidalSurface s = sample_surface(d, {}, seed);
    std::ostringstream out;
    out << "# seeded sample, d = " << d << ", seed = " << seed << '\n'
        << "name = sample-d" << d << "-seed" << seed << '\n'
        << "field = Q\nvars = x0 x1 x2 x3\nline = x0, x1\nF = " << s.equation().to_string() << '\n';
    return out.str();
}

std::string sample_hypersurface_file(int n, int m, int d, std::uint64_t seed) {
    const SubmonoidalHypersurface h = random_hypersurface(n, m, d, seed);
    std::ostringstream out;
    out << "# seeded sample, n = " << n << ", m = " << m << ", d = " << d << ", seed = " << seed << '\n'
        << "name = hyp-n" << n << "-m" << m << "-d" << d << "-seed" << seed << '\n' << "field = Q\nvars =";
    for (int i = 0; i <= n + 1; ++i) out << " x" << i;
    out << "\ngamma_codim = " << m << "\nF = " << h.equation().to_string() << '\n';
    return out.str();
}

std::string render_structured(const Report& r) { return r.tree.dump(2) + "\n"; }

namespace {

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool flat(const json& v) {
    return !v.is_structured() ||
           (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return !x.is_structured(); }));
}

std::string inline_value(const json& v) {
    if (!v.is_array()) return scalar(v);
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
    return s + "]";
}

void render_value(std::ostringstream& out, const json& v, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        for (const auto& [k, x] : v.items()) {
            if (flat(x) || x.empty()) {
                out << pad << k << ": " << inline_value(x) << "\n";
            } else {
                out << pad << k << ":\n";
                render_value(out, x, indent + 2);
            }
        }
        return;
    }
    for (const auto& x : v) {
        if (flat(x)) {
            out << pad << "- " << inline_value(x) << "\n";
        } else {
            out << pad << "-\n";
            render_value(out, x, indent + 2);
        }
    }
}

}  // namespace

std::string render_human(const Report& r) {
    std::ostringstream out;
    const json& t = r.tree;
    out << "msurf " << t.value("command", "") << " (" << t["tool"].value("version", "") << ")";
    if (t.contains("input")) out << " " << t["input"].value("path", "");
    out << "\n";
    if (t.contains("rejection")) {
        out << "rejected [" << t["rejection"].value("invariant", "") << "]: " << t["rejection"].value("message", "")
            << "\n";
        return out.str();
    }
    for (const auto& c : t["checks"]) {
        std::string st = c.value("status", "");
        std::transform(st.begin(), st.end(), st.begin(), ::toupper);
        out << "  " << st << "  " << c.value("name", "") << "  (" << c.value("certifies", "") << ")\n";
    }
    out << "status: " << t.value("status", "") << "\n";
    if (t.contains("results")) {
        out << "results:\n";
        render_value(out, t["results"], 2);
    }
    if (t.contains("timing_us")) out << "time: " << t["timing_us"].get<long long>() << " us\n";
    return out.str();
}

}  // namespace msurf::cli
