#include "msurf/submonoidal/submonoidal.hpp"

#include "msurf/exactalg/linalg.hpp"
#include "msurf/exactalg/rings.hpp"

namespace msurf {

namespace {

MultiPoly xvar(std::size_t i) { return MultiPoly::variable(p3_vars(), i); }
MultiPoly two() { return MultiPoly::constant(p3_vars(), 2); }

void require_form(const MultiPoly& f, int degree, const char* name) {
    const std::size_t allowed[] = {0, 1};
    if (!f.involves_only(allowed)) throw Rejection("degree", std::string(name) + " must be a form in x0, x1");
    if (!f.is_zero() && (!f.is_homogeneous() || f.total_degree() != degree))
        throw Rejection("degree", std::string(name) + " must be homogeneous of degree " + std::to_string(degree));
}

std::string exponent_string(const Exponent& e) {
    return MultiPoly::monomial(p3_vars(), e, 1).to_string();
}

}  // namespace

MultiPoly SubmonoidalSurface::equation() const {
    const MultiPoly x2 = xvar(2), x3 = xvar(3);
    return A + two() * B * x2 + two() * C * x3 + D * x2 * x2 + two() * E * x2 * x3 + F * x3 * x3;
}

PolyMatrix SubmonoidalSurface::conic_matrix() const {
    const MultiPoly a = to_params(A, 2), b = to_params(B, 2), c = to_params(C, 2);
    const MultiPoly dd = to_params(D, 2), e = to_params(E, 2), f = to_params(F, 2);
    return {{a, b, c}, {b, dd, e}, {c, e, f}};
}

PolyMatrix SubmonoidalSurface::pole_matrix() const {
    return {{to_params(B, 2), to_params(D, 2), to_params(E, 2)}, {to_params(C, 2), to_params(E, 2), to_params(F, 2)}};
}

SubmonoidalSurface make_submonoidal(int d, const MultiPoly& A, const MultiPoly& B, const MultiPoly& C,
                                    const MultiPoly& D, const MultiPoly& E, const MultiPoly& F) {
    if (d < 3) throw Rejection("degree", "d must be at least 3");
    SubmonoidalSurface s{d,
                         A.rename_into(p3_vars()),
                         B.rename_into(p3_vars()),
                         C.rename_into(p3_vars()),
                         D.rename_into(p3_vars()),
                         E.rename_into(p3_vars()),
                         F.rename_into(p3_vars())};
    require_form(s.A, d, "A");
    require_form(s.B, d - 1, "B");
    require_form(s.C, d - 1, "C");
    require_form(s.D, d - 2, "D");
    require_form(s.E, d - 2, "E");
    require_form(s.F, d - 2, "F");
    if (s.D.is_zero() && s.E.is_zero() && s.F.is_zero())
        throw Rejection("monoidal", "D = E = F = 0, the line has multiplicity d-1 or more");
    return s;
}

FieldMatrix line_normalization(const MultiPoly& l1, const MultiPoly& l2) {
    const std::size_t n = l1.nvars();
    auto row_of = [&](const MultiPoly& l) {
        if (!l.is_homogeneous() || l.total_degree() != 1) throw Rejection("line", "line equations must be linear forms");
        std::vector<FieldElement> row(n);
        for (const auto& [e, c] : l.terms())
            for (std::size_t i = 0; i < n; ++i)
                if (e[i] == 1) row[i] = c;
        return row;
    };
    FieldMatrix m{row_of(l1), row_of(l2)};
    if (rank(m) < 2) throw Rejection("line", "the two linear forms are dependent");
    for (std::size_t j = 0; j < n && m.size() < n; ++j) {
        std::vector<FieldElement> e(n);
        e[j] = 1;
        m.push_back(e);
        if (rank(m) < m.size()) m.pop_back();
    }
    return m;
}

Extraction submonoidal_from_polynomial(const MultiPoly& F, const MultiPoly& l1, const MultiPoly& l2) {
    const MultiPoly f = F.rename_into(p3_vars());
    if (f.is_zero() || !f.is_homogeneous()) throw Rejection("degree", "F must be a nonzero homogeneous polynomial");
    const int d = f.total_degree();
    if (d < 3) throw Rejection("degree", "F must have degree at least 3");
    const FieldMatrix N = line_normalization(l1.rename_into(p3_vars()), l2.rename_into(p3_vars()));
    const FieldMatrix Ninv = *inverse(N);
    const MultiPoly g = linear_substitution(f, Ninv);

    MultiPoly A(p3_vars()), B(p3_vars()), C(p3_vars()), D(p3_vars()), E(p3_vars()), Fq(p3_vars());
    const FieldElement half = FieldElement::ratio(1, 2);
    for (const auto& [e, c] : g.terms()) {
        const unsigned low = e[0] + e[1];
        if (static_cast<int>(low) < d - 2)
            throw Rejection("multiplicity", "monomial " + exponent_string(e) + " has (x0,x1)-degree " +
                                                std::to_string(low) + " < d-2 = " + std::to_string(d - 2));
        Exponent base{e[0], e[1], 0, 0};
        const unsigned a = e[2], b = e[3];
        if (a == 0 && b == 0) A.add_term(base, c);
        else if (a == 1 && b == 0) B.add_term(base, c * half);
        else if (a == 0 && b == 1) C.add_term(base, c * half);
        else if (a == 2) D.add_term(base, c);
        else if (a == 1 && b == 1) E.add_term(base, c * half);
        else Fq.add_term(base, c);
    }
    return Extraction{make_submonoidal(d, A, B, C, D, E, Fq), N, g};
}

MultiPoly discriminant_P(const SubmonoidalSurface& s) { return determinant(s.conic_matrix()); }

MultiPoly small_discriminant_R(const SubmonoidalSurface& s) {
    const MultiPoly e = to_params(s.E, 2);
    return e * e - to_params(s.D, 2) * to_params(s.F, 2);
}

FiberReport classify_fibers(const SubmonoidalSurface& s) {
    FiberReport r;
    r.P = discriminant_P(s);
    r.R = small_discriminant_R(s);
    r.R_squarefree = !r.R.is_zero() && is_squarefree(r.R, 0, 1);
    if (r.P.is_zero()) throw Rejection("degenerate", "P = 0: every residual conic is singular");
    r.P_factors = squarefree_decomposition(r.P, 0, 1);
    const MultiPoly p1 = r.P_factors.part(1, t_vars());
    const MultiPoly p2 = r.P_factors.part(2, t_vars());
    r.s1 = p1.total_degree();
    r.third_kind_locus = minor_gcd_locus(s.conic_matrix(), p2, 1);
    r.s3 = r.third_kind_locus.total_degree();
    r.s2 = p2.total_degree() - r.s3;
    r.nodes = r.s2 + 2 * r.s3;
    for (const auto& f : r.P_factors.factors) {
        if (f.multiplicity < 3) continue;
        r.high_multiplicity.push_back("multiplicity " + std::to_string(f.multiplicity) + " along " +
                                      f.factor.to_string() + " (degree " + std::to_string(f.factor.total_degree()) +
                                      "): rational double points of type A_" +
                                      std::to_string(f.multiplicity - 1) + " expected, non-normal or worse");
    }
    return r;
}

Verdict check_nondegenerate(const SubmonoidalSurface& s) {
    Verdict v;
    auto clause = [&](bool ok, const std::string& text) { (ok ? v.passed : v.failed).push_back(text); };
    const MultiPoly P = discriminant_P(s);
    clause(!P.is_zero(), "P is nonzero");
    if (!P.is_zero())
        clause(squarefree_decomposition(P, 0, 1).max_multiplicity() <= 2, "P has no root of multiplicity above 2");
    const MultiPoly R = small_discriminant_R(s);
    clause(!R.is_zero() && is_squarefree(R, 0, 1), "R is nonzero and squarefree");
    v.unchecked.push_back("no singular line of the surface meets Gamma");
    v.pass = v.failed.empty();
    return v;
}

MultiPoly eckardt_locus(const SubmonoidalSurface& s) {
    const MultiPoly R = small_discriminant_R(s);
    if (R.is_zero()) throw Rejection("degenerate", "R = 0, Eckardt locus undefined");
    return minor_gcd_locus(s.pole_matrix(), squarefree_part(R, 0, 1), 1);
}

const VarsPtr& pinch_vars() {
    static const VarsPtr v = MultiPoly::make_vars({"y1", "y2"});
    return v;
}

PinchReport pinch_divisor(const SubmonoidalSurface& s) {
    if (s.d < 4) throw std::invalid_argument("pinch divisor needs d >= 4");
    static const VarsPtr ring = MultiPoly::make_vars({"t0", "t1", "y1", "y2"});
    PinchReport out;
    MultiPoly D = to_params(s.D, 2), E = to_params(s.E, 2), F = to_params(s.F, 2);
    const int nonzero = !D.is_zero() + !E.is_zero() + !F.is_zero();
    // with a single nonzero coefficient G = D y1^2 (or similar) and the gcd is
    // the whole form; keep it so the divisor sees the t-roots of D
    out.common_factor = nonzero > 1 ? poly_gcd(std::vector<MultiPoly>{D, E, F}) : MultiPoly::constant(t_vars(), 1);
    int n = s.d - 2;
    if (!out.common_factor.is_constant()) {
        D = exact_quotient(D, out.common_factor);
        E = exact_quotient(E, out.common_factor);
        F = exact_quotient(F, out.common_factor);
        n -= out.common_factor.total_degree();
    }
    const std::size_t to_ring[] = {0, 1};
    const MultiPoly y1 = MultiPoly::variable(ring, 2), y2 = MultiPoly::variable(ring, 3);
    const MultiPoly G = D.remap(ring, to_ring) * y1 * y1 +
                        MultiPoly::constant(ring, 2) * E.remap(ring, to_ring) * y1 * y2 +
                        F.remap(ring, to_ring) * y2 * y2;
    const MultiPoly disc = binary_discriminant(G, static_cast<unsigned>(n), 0, 1);
    const std::size_t to_y[] = {0, 0, 0, 1};
    out.divisor = disc.remap(pinch_vars(), to_y);
    out.degree = out.divisor.total_degree();
    return out;
}

IncidenceReport verify_incidence(const std::vector<Point>& points, const std::vector<MultiPoly>& hyperplanes) {
    IncidenceReport r;
    for (const auto& p : points) {
        bool nz = false;
        for (const auto& x : p) nz = nz || !x.is_zero();
        if (!nz) throw std::invalid_argument("zero vector is not a projective point");
    }
    for (const auto& h : hyperplanes)
        if (h.is_zero()) throw std::invalid_argument("zero linear form is not a hyperplane");
    r.hyperplane_counts.assign(hyperplanes.size(), 0);
    for (const auto& p : points) {
        std::vector<bool> row;
        int count = 0;
        for (std::size_t j = 0; j < hyperplanes.size(); ++j) {
            const bool on = hyperplanes[j].evaluate(p).is_zero();
            row.push_back(on);
            count += on;
            r.hyperplane_counts[j] += on;
        }
        r.matrix.push_back(std::move(row));
        r.point_counts.push_back(count);
    }
    return r;
}

bool is_singular_point(const MultiPoly& F, const Point& p) {
    if (!F.evaluate(p).is_zero()) return false;
    for (std::size_t i = 0; i < F.nvars(); ++i)
        if (!F.derivative(i).evaluate(p).is_zero()) return false;
    return true;
}

}  // namespace msurf
