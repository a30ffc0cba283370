// One line per acceptance criterion; exit status is the number of failures.
#include "msurf/cli/input.hpp"
#include "msurf/cremona/cremona.hpp"
#include "msurf/exactalg/linalg.hpp"
#include "msurf/exactalg/parse.hpp"
#include "msurf/exactalg/polyalg.hpp"
#include "msurf/exactalg/random.hpp"
#include "msurf/exactalg/rings.hpp"
#include "msurf/hypersurface/hypersurface.hpp"
#include "msurf/lattice/lattice.hpp"
#include "msurf/monoidal/monoidal.hpp"
#include "msurf/submonoidal/submonoidal.hpp"

#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace msurf;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> problems;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (problems.size() < 5) problems.push_back(what);
        }
    }
};

std::string tag(int d, std::uint64_t seed) { return "d=" + std::to_string(d) + " seed=" + std::to_string(seed); }

std::vector<SubmonoidalSurface> seeded_surfaces(int d, int count, std::uint64_t base) {
    std::vector<SubmonoidalSurface> out;
    for (int i = 0; i < count; ++i) out.push_back(sample_surface(d, {}, base + static_cast<std::uint64_t>(i)));
    return out;
}

std::vector<std::filesystem::path> corpus() {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(MSURF_DATA_DIR)) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    return files;
}

Outcome discriminant_degrees() {
    Outcome o;
    int n = 0;
    for (int d = 3; d <= 6; ++d)
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const auto s = sample_surface(d, {}, seed);
            const MultiPoly P = discriminant_P(s), R = small_discriminant_R(s);
            o.require(!P.is_zero() && P.total_degree() == 3 * d - 4, "deg P " + tag(d, seed));
            o.require(!R.is_zero() && R.total_degree() == 2 * (d - 2), "deg R " + tag(d, seed));
            ++n;
        }
    o.detail = std::to_string(n) + " surfaces, d = 3..6";
    return o;
}

Outcome fiber_census() {
    Outcome o;
    int checked = 0;
    auto run = [&](const SubmonoidalSurface& s, const std::string& label) {
        if (!check_nondegenerate(s).pass) return;
        const FiberReport f = classify_fibers(s);
        o.require(f.s1 + 2 * f.s2 + 2 * f.s3 == 3 * s.d - 4, "census " + label);
        o.require(f.nodes <= 3 * s.d - 4, "node bound " + label);
        ++checked;
    };
    for (int d = 3; d <= 6; ++d)
        for (std::uint64_t seed = 1; seed <= 10; ++seed) run(sample_surface(d, {}, seed), tag(d, seed));
    for (const auto& p : corpus()) {
        if (p.extension() != ".surf") continue;
        const auto spec = cli::read_input(p.string());
        try {
            run(submonoidal_from_polynomial(spec.F, (*spec.line)[0], (*spec.line)[1]).surface, p.filename().string());
        } catch (const Rejection&) {
            // monoidal files have no conic bundle
        }
    }
    run(pluecker_surface().surface, "pluecker");
    o.require(checked >= 40, "too few non-degenerate samples");
    o.detail = std::to_string(checked) + " non-degenerate surfaces";
    return o;
}

// Restriction of F to the plane l = 0 is c * h^2.
bool is_trope(const MultiPoly& F, const MultiPoly& plane) {
    const auto& vars = F.vars_ptr();
    std::size_t k = 0;
    while (plane.coefficient(Exponent{k == 0, k == 1, k == 2, k == 3}).is_zero()) ++k;
    auto coeff = [&](std::size_t i) {
        Exponent e(4, 0);
        e[i] = 1;
        return plane.coefficient(e);
    };
    const FieldElement ak = coeff(k);
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < 4; ++i) images.push_back(MultiPoly::variable(vars, i));
    MultiPoly solved(vars);
    for (std::size_t i = 0; i < 4; ++i)
        if (i != k) solved -= (coeff(i) / ak) * MultiPoly::variable(vars, i);
    images[k] = solved;
    const MultiPoly G = F.substitute(images);
    if (G.is_zero()) return false;
    std::vector<MultiPoly> parts{G};
    for (std::size_t i = 0; i < 4; ++i)
        if (i != k) parts.push_back(G.derivative(i));
    const MultiPoly h = poly_gcd(parts);
    if (h.total_degree() * 2 != G.total_degree()) return false;
    return divides(h * h, G) && exact_quotient(G, h * h).is_constant();
}

Outcome pluecker_package() {
    Outcome o;
    const PlueckerData pl = pluecker_surface();
    o.require(pl.nodes.size() == 8, "eight nodes listed");
    for (std::size_t i = 0; i < pl.nodes.size(); ++i)
        o.require(is_singular_point(pl.determinant_quartic, pl.nodes[i]), "node " + pl.node_names[i] + " singular");
    o.require(pl.tropes.size() == 8, "eight tropes listed");
    for (std::size_t i = 0; i < pl.tropes.size(); ++i)
        o.require(is_trope(pl.determinant_quartic, pl.tropes[i]), "trope " + pl.tropes[i].to_string());
    o.require(!is_trope(pl.determinant_quartic, poly_parse("x0 + 2*x1 + 3*x2 + 5*x3", p3_vars(), Field::rationals())),
              "a general plane is not a trope");
    const IncidenceReport inc = verify_incidence(pl.nodes, pl.tropes);
    for (int c : inc.point_counts) o.require(c == 4, "node on four tropes");
    for (int c : inc.hyperplane_counts) o.require(c == 4, "trope through four nodes");
    const FiberReport f = classify_fibers(pl.surface);
    o.require(f.s1 == 0 && f.s2 == 0 && f.s3 == 4, "s = (0,0,4)");
    bool square = !f.P_factors.factors.empty();
    for (const auto& fac : f.P_factors.factors) square = square && fac.multiplicity % 2 == 0;
    o.require(square, "P is a perfect square");
    o.detail = "8 singular nodes, 8 tropes, (8_4), s = (" + std::to_string(f.s1) + "," + std::to_string(f.s2) + "," +
               std::to_string(f.s3) + ")";
    return o;
}

Outcome theta_prime_fixes() {
    Outcome o;
    int n = 0;
    for (int d = 3; d <= 5; ++d)
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto s = sample_surface(d, {}, seed);
            const auto r = verify_cross_minors(theta_prime(s), s.equation());
            o.require(r.checked == 6 && r.pass(), "cross-minors " + tag(d, seed));
            ++n;
        }
    o.detail = std::to_string(n) + " surfaces, 6 cross-minors each, zero remainder";
    return o;
}

Outcome theta_invariance() {
    Outcome o;
    for (int d = 3; d <= 4; ++d)
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto s = sample_surface(d, {}, seed);
            const auto t = verify_surface_invariance(theta(s), s.equation());
            o.require(t.divisible && t.quotient_degree == d * (2 * d - 4), "F | F(Theta) " + tag(d, seed));
        }
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto s = sample_surface(3, {}, seed);
        o.require(verify_involution(theta(s), InvolutionMethod::symbolic).pass, "symbolic square " + tag(3, seed));
    }
    for (int d = 4; d <= 5; ++d)
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto s = sample_surface(d, {}, seed);
            const auto v = verify_involution(theta(s), InvolutionMethod::sampled, seed, 20);
            o.require(v.pass && v.points_passed == 20, "sampled square " + tag(d, seed));
        }
    o.detail = "invariance d = 3,4; symbolic square d = 3; 20/20 points d = 4,5";
    return o;
}

// Moves the parameter [1,0] onto a root of P by adjusting the x0^d term of A.
SubmonoidalSurface with_line_pair_at_origin(SubmonoidalSurface s) {
    const Point t{FieldElement(1), FieldElement(0)};
    FieldMatrix M;
    for (const auto& row : s.conic_matrix()) {
        std::vector<FieldElement> r;
        for (const auto& e : row) r.push_back(e.evaluate(t));
        M.push_back(r);
    }
    const FieldElement minor = M[1][1] * M[2][2] - M[1][2] * M[2][1];
    M[0][0] = FieldElement(0);
    const FieldElement rest = determinant(M);
    Exponent e{static_cast<unsigned>(s.d), 0, 0, 0};
    s.A.add_term(e, -s.A.coefficient(e) - rest / minor);
    return s;
}

Outcome satellite() {
    Outcome o;
    const auto eck =
        submonoidal_from_polynomial(poly_parse("2*x0^2*x2 + 2*x1^2*x3 + x0*x2^2 + x1*x3^2", p3_vars(), Field::rationals()),
                                    MultiPoly::variable(p3_vars(), 0), MultiPoly::variable(p3_vars(), 1))
            .surface;
    const SatelliteCurve c = satellite_curve(eck);
    // on V(x0 + x2, x1 + x3)
    o.require(c.degree == 1, "Eckardt satellite is a line");
    o.require((c.forms[0] + c.forms[2]).is_zero() && (c.forms[1] + c.forms[3]).is_zero(),
              "Eckardt satellite lies on V(x0+x2, x1+x3)");
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto s = sample_surface(4, {}, seed);
        o.require(satellite_curve(s).degree == 5, "reduced degree 5 " + tag(4, seed));
    }
    // satellite point at a line-pair parameter is the singular point of the pair
    int pairs = 0;
    auto compare = [&](const SubmonoidalSurface& s, const Point& t, const std::string& label) {
        FieldMatrix M;
        for (const auto& row : s.conic_matrix()) {
            std::vector<FieldElement> r;
            for (const auto& e : row) r.push_back(e.evaluate(t));
            M.push_back(r);
        }
        if (rank(M) != 2) return;
        const auto ker = nullspace(M, 3);
        const auto& k = ker.at(0);
        if (k[0].is_zero()) return;  // singular point on Gamma
        const Point sing{t[0] * k[0], t[1] * k[0], k[1], k[2]};
        o.require(projectively_equal(satellite_point(satellite_curve(s), t), sing), "line pair " + label);
        ++pairs;
    };
    compare(eck, {FieldElement(1), FieldElement(-1)}, "Eckardt t=[1,-1]");
    for (int d = 3; d <= 5; ++d)
        for (std::uint64_t seed = 1; seed <= 3; ++seed)
            compare(with_line_pair_at_origin(sample_surface(d, {}, seed)), {FieldElement(1), FieldElement(0)},
                    tag(d, seed));
    o.require(pairs == 10, "expected 10 line-pair comparisons, got " + std::to_string(pairs));
    o.detail = "Eckardt satellite [t0, t1, -t0, -t1]; d=4 degree 5; " + std::to_string(pairs) + " line pairs";
    return o;
}

Outcome lattice_census() {
    Outcome o;
    const auto census = enumerate_special_sections(4);
    const std::map<int, std::size_t> want{{0, 1}, {1, 28}, {2, 70}, {3, 28}, {4, 1}};
    for (const auto& [n, count] : want)
        o.require(census.by_n.count(n) && census.by_n.at(n).size() == count, "d=4 count at n=" + std::to_string(n));
    o.require(census.total() == 128, "d=4 total 128");
    int degree_zero = 0;
    for (const auto& [n, list] : census.by_n)
        for (const auto& s : list) degree_zero += dual_section(s, 4).n == 0;
    o.require(degree_zero == 1, "one degree-0 dual");
    for (int d = 3; d <= 8; ++d) {
        o.require(even_binomial_sum(d) == (1ULL << (3 * d - 5)), "binomial sum d=" + std::to_string(d));
        const auto sc = standard_classes(d);
        o.require(intersection_number(sc.Sigma, sc.Sigma) == d - 4, "Sigma^2 d=" + std::to_string(d));
        o.require(intersection_number(sc.K, sc.K) == 12 - 3 * d, "K^2 d=" + std::to_string(d));
    }
    o.detail = "d=4: 1/28/70/28/1 = 128; binomial sums, Sigma^2, K^2 for d = 3..8";
    return o;
}

Outcome tau_checks() {
    Outcome o;
    std::size_t sections = 0;
    for (int d : {4, 6}) {
        const int rank = 3 * d - 2;
        for (int i = 0; i < rank; ++i) {
            const LatticeClass ei = LatticeClass::basis(d, i);
            o.require(tau_action(tau_action(ei)) == ei, "tau^2 on e" + std::to_string(i));
            for (int j = 0; j < rank; ++j) {
                const LatticeClass ej = LatticeClass::basis(d, j);
                o.require(intersection_number(tau_action(ei), tau_action(ej)) == intersection_number(ei, ej),
                          "isometry");
            }
        }
        const auto sc = standard_classes(d);
        o.require(tau_action(sc.H) == sc.H, "tau(H) = H d=" + std::to_string(d));
        for (const auto& [n, list] : enumerate_special_sections(d).by_n)
            for (const auto& s : list) {
                o.require(tau_action(s.cls) == dual_section(s, d).cls, "tau(E) = dual(E)");
                ++sections;
            }
    }
    o.detail = "d = 4, 6; " + std::to_string(sections) + " special-section classes";
    return o;
}

Outcome hypersurface_specialization() {
    Outcome o;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const int d = seed % 2 ? 3 : 4;
        const auto s = sample_surface(d, {}, 300 + seed);
        const auto h = as_hypersurface(s);
        const auto sat = satellite_parameterization(h);
        const auto ref = satellite_curve(s);
        bool same = sat.forms.size() == 4;
        for (std::size_t k = 0; same && k < 4; ++k) same = sat.forms[k] == ref.forms[k];
        o.require(same, "satellite " + tag(d, seed));
        o.require(projectively_equal(theta_general(h), theta(s)), "Theta " + tag(d, seed));
        o.require(projectively_equal(theta_prime_general(h), theta_prime(s)), "Theta' " + tag(d, seed));
    }
    int instances = 0;
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= n + 1; ++m)
            for (int d = 2; d <= (n >= 4 ? 3 : 5); ++d) {
                const auto h = random_hypersurface(n, m, d, 500 + 100 * n + 10 * m + d);
                const auto sat = satellite_parameterization(h);
                o.require(sat.raw_degree == (n + 2 - m) * (d - 2) + 1, "raw degree n,m,d");
                ++instances;
                if (m == n + 1) {
                    const MultiPoly polar = point_polar(h);
                    o.require(polar.total_degree() == d - 1 && sat.raw_degree == d - 1, "polar degree d-1");
                    o.require(polar.substitute(sat.forms).is_zero(), "satellite on first polar");
                }
            }
    o.detail = "5 surfaces at (2,2); " + std::to_string(instances) + " assembled instances";
    return o;
}

Outcome bookkeeping() {
    Outcome o;
    const auto qc = monoidal_web_invariants(2, 0, 3);
    o.require(qc.all_pass() && qc.d_prime == 3, "quadro-cubic web");
    for (int d = 3; d <= 8; ++d) {
        o.require(monoidal_web_invariants(d, d - 1, d - 1).all_pass(), "web (d-1,d-1) d=" + std::to_string(d));
        o.require(pair_intersection_profile(d) == std::pair{2 * d - 1, 2 * d - 2}, "pair profile");
        o.require(moduli_dimension(SurfaceKind::submonoidal, d) == 6 * d - 14, "submonoidal moduli");
        if (d >= 4) o.require(moduli_dimension(SurfaceKind::monoidal, d) == 3 * d - 11, "monoidal moduli");
    }
    o.detail = "web identities, moduli dimensions, pair profiles for d = 3..8";
    return o;
}

Outcome kernel_soundness() {
    Outcome o;
    Rng rng(2024);
    const VarsPtr& tv = t_vars();
    int reconstructed = 0;
    for (int i = 0; reconstructed < 100; ++i) {
        // products of small random factors with repetition, degree <= 10
        MultiPoly f = MultiPoly::constant(tv, rng.uniform(1, 5));
        int deg = 0;
        while (deg < 10) {
            const unsigned fd = static_cast<unsigned>(rng.uniform(1, 3));
            const unsigned mult = static_cast<unsigned>(rng.uniform(1, 3));
            if (deg + static_cast<int>(fd * mult) > 10) break;
            MultiPoly g = rng.binary_form(tv, fd, 4);
            if (g.is_zero()) continue;
            f *= g.pow(mult);
            deg += static_cast<int>(fd * mult);
            if (rng.uniform(0, 3) == 0) break;
        }
        if (f.is_constant()) continue;
        const auto sq = squarefree_decomposition(f, 0, 1);
        o.require(sq.reconstruct(tv) == f, "squarefree reconstruction #" + std::to_string(i));
        ++reconstructed;
    }
    const VarsPtr& xv = p3_vars();
    int coprime = 0, shared = 0;
    for (int i = 0; i < 60; ++i) {
        const MultiPoly common = i % 2 ? rng.binary_form(tv, 1 + i % 3, 4) : MultiPoly::constant(tv, 1);
        const MultiPoly a = rng.binary_form(tv, 2, 5) * common, b = rng.binary_form(tv, 3, 5) * common;
        if (a.is_zero() || b.is_zero()) continue;
        const MultiPoly g = poly_gcd(a, b);
        o.require(divides(g, a) && divides(g, b), "gcd divides both");
        // dehomogenize at t1 = 1: resultant vanishes exactly when a common root exists
        const MultiPoly a1 = a.partial_evaluate(1, FieldElement(1)), b1 = b.partial_evaluate(1, FieldElement(1));
        if (a1.degree_in(0) < 1 || b1.degree_in(0) < 1) continue;
        const MultiPoly g1 = poly_gcd(a1, b1);
        const bool zero = resultant(a1, b1, 0).is_zero();
        o.require(zero == (g1.total_degree() > 0), "resultant vs gcd");
        (zero ? shared : coprime)++;
    }
    o.require(shared > 0 && coprime > 0, "both resultant outcomes exercised");
    for (int i = 0; i < 20; ++i) {
        const MultiPoly a = rng.form(xv, 3, 4, 4), c = rng.form(xv, 2, 4, 4);
        if (a.is_zero() || c.is_zero()) continue;
        const MultiPoly g = poly_gcd(a * c, c * rng.form(xv, 2, 4, 4));
        o.require(divides(g, a * c) && divides(c.monic(), g), "multivariate gcd");
    }
    int files = 0;
    for (const auto& p : corpus()) {
        const auto spec = cli::read_input(p.string());
        const std::string once = cli::format_input(spec);
        const auto again = cli::parse_input(once);
        o.require(cli::format_input(again) == once, "round trip " + p.filename().string());
        o.require(again.F == spec.F, "F survives " + p.filename().string());
        const MultiPoly back = poly_parse(spec.F.to_string(), spec.F.vars_ptr(), spec.field);
        o.require(back == spec.F, "print/parse " + p.filename().string());
        ++files;
    }
    o.require(files >= 20, "corpus present");
    o.detail = "100 squarefree reconstructions; gcd/resultant pairs; " + std::to_string(files) + " corpus files";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"discriminant degrees", discriminant_degrees},
        {"fiber census identity", fiber_census},
        {"Pluecker package", pluecker_package},
        {"Theta' fixes the surface pointwise", theta_prime_fixes},
        {"Theta invariance and involutivity", theta_invariance},
        {"satellite", satellite},
        {"lattice census", lattice_census},
        {"tau", tau_checks},
        {"hypersurface specialization", hypersurface_specialization},
        {"bookkeeping formulas", bookkeeping},
        {"kernel soundness", kernel_soundness},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.problems.push_back(std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << (i + 1) << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first;
        if (!o.detail.empty()) std::cout << ": " << o.detail;
        std::cout << "\n";
        for (const auto& p : o.problems) std::cout << "    failed: " << p << "\n";
        failures += !o.pass;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " criteria pass\n";
    return failures;
}
