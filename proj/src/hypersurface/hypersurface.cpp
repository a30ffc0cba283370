#include "msurf/hypersurface/hypersurface.hpp"

#include "msurf/errors.hpp"
#include "msurf/exactalg/linalg.hpp"
#include "msurf/exactalg/polyalg.hpp"
#include "msurf/exactalg/random.hpp"
#include "msurf/exactalg/rings.hpp"

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>

namespace msurf {

namespace {

MultiPoly xv(const VarsPtr& vars, std::size_t i) { return MultiPoly::variable(vars, i); }

bool base_form(const MultiPoly& f, int m, int degree) {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous() || f.total_degree() != degree) return false;
    std::vector<std::size_t> allowed(static_cast<std::size_t>(m));
    std::iota(allowed.begin(), allowed.end(), std::size_t{0});
    return f.involves_only(allowed);
}

}  // namespace

MultiPoly SubmonoidalHypersurface::equation() const {
    const VarsPtr& vars = A.vars_ptr();
    const FieldElement two(2);
    MultiPoly F = A;
    const std::size_t k = l.size();
    for (std::size_t i = 0; i < k; ++i) {
        F += two * l[i] * xv(vars, m + i);
        for (std::size_t j = 0; j < k; ++j) F += q[i][j] * xv(vars, m + i) * xv(vars, m + j);
    }
    return F;
}

PolyMatrix SubmonoidalHypersurface::quadric_matrix() const {
    const std::size_t k = l.size();
    PolyMatrix M(k + 1, std::vector<MultiPoly>(k + 1));
    M[0][0] = to_params(A, m);
    for (std::size_t i = 0; i < k; ++i) {
        M[0][i + 1] = M[i + 1][0] = to_params(l[i], m);
        for (std::size_t j = 0; j < k; ++j) M[i + 1][j + 1] = to_params(q[i][j], m);
    }
    return M;
}

SubmonoidalHypersurface make_hypersurface(int n, int m, int d, MultiPoly A, std::vector<MultiPoly> l,
                                          std::vector<std::vector<MultiPoly>> q) {
    if (n < 1 || m < 1 || m > n + 1) throw Rejection("range", "need 1 <= m <= n+1");
    if (d < 2) throw Rejection("degree", "need d >= 2");
    const std::size_t k = static_cast<std::size_t>(n + 2 - m);
    if (l.size() != k || q.size() != k) throw Rejection("shape", "block sizes do not match n+2-m");
    const VarsPtr& vars = projective_vars(static_cast<std::size_t>(n + 1));
    auto place = [&](MultiPoly& f) {
        if (f.vars_ptr() == nullptr || f.nvars() == 0) f = MultiPoly(vars);
        if (!f.is_zero() && f.nvars() != vars->size()) f = f.rename_into(vars);
        if (f.is_zero()) f = MultiPoly(vars);
    };
    place(A);
    if (!base_form(A, m, d)) throw Rejection("degree", "A must be a form of degree d in x0..x(m-1)");
    bool any_q = false;
    for (std::size_t i = 0; i < k; ++i) {
        place(l[i]);
        if (!base_form(l[i], m, d - 1)) throw Rejection("degree", "l_i must be forms of degree d-1");
        if (q[i].size() != k) throw Rejection("shape", "q must be square");
        for (std::size_t j = 0; j < k; ++j) {
            place(q[i][j]);
            if (!base_form(q[i][j], m, d - 2)) throw Rejection("degree", "q_ij must be forms of degree d-2");
            any_q = any_q || !q[i][j].is_zero();
        }
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (q[i][j] != q[j][i]) throw Rejection("symmetry", "q must be symmetric");
    if (!any_q) throw Rejection("monoidal", "all q_ij vanish; Gamma has multiplicity d-1");
    return SubmonoidalHypersurface{n, m, d, std::move(A), std::move(l), std::move(q)};
}

SubmonoidalHypersurface hypersurface_from_polynomial(const MultiPoly& F, int m) {
    const int n = static_cast<int>(F.nvars()) - 2;
    if (n < 1) throw Rejection("range", "need at least three variables");
    if (m < 1 || m > n + 1) throw Rejection("range", "need 1 <= m <= n+1");
    if (F.is_zero() || !F.is_homogeneous()) throw Rejection("degree", "F must be a nonzero form");
    const int d = F.total_degree();
    const VarsPtr& vars = projective_vars(static_cast<std::size_t>(n + 1));
    const MultiPoly G = F.rename_into(vars);
    const std::size_t k = static_cast<std::size_t>(n + 2 - m);
    MultiPoly A(vars);
    std::vector<MultiPoly> l(k, MultiPoly(vars));
    std::vector<std::vector<MultiPoly>> q(k, std::vector<MultiPoly>(k, MultiPoly(vars)));
    const FieldElement half = FieldElement(1) / FieldElement(2);
    for (const auto& [e, c] : G.terms()) {
        std::vector<std::size_t> fib;
        for (std::size_t i = static_cast<std::size_t>(m); i < e.size(); ++i)
            for (unsigned r = 0; r < e[i]; ++r) fib.push_back(i - static_cast<std::size_t>(m));
        Exponent base = e;
        for (std::size_t i = static_cast<std::size_t>(m); i < base.size(); ++i) base[i] = 0;
        const MultiPoly mono = MultiPoly::monomial(vars, base, c);
        if (fib.empty()) {
            A += mono;
        } else if (fib.size() == 1) {
            l[fib[0]] += half * mono;
        } else if (fib.size() == 2) {
            if (fib[0] == fib[1]) {
                q[fib[0]][fib[0]] += mono;
            } else {
                q[fib[0]][fib[1]] += half * mono;
                q[fib[1]][fib[0]] += half * mono;
            }
        } else {
            throw Rejection("multiplicity", "Gamma has multiplicity below d-2: term " +
                                                MultiPoly::monomial(vars, e, c).to_string());
        }
    }
    return make_hypersurface(n, m, d, A, l, q);
}

SubmonoidalHypersurface as_hypersurface(const SubmonoidalSurface& s) {
    return make_hypersurface(2, 2, s.d, s.A, {s.B, s.C}, {{s.D, s.E}, {s.E, s.F}});
}

PolyMatrix fiber_matrix(const SubmonoidalHypersurface& h) {
    const PolyMatrix M = h.quadric_matrix();
    return PolyMatrix(M.begin() + 1, M.end());
}

std::vector<MultiPoly> signed_minors(const SubmonoidalHypersurface& h) {
    const PolyMatrix A = fiber_matrix(h);
    std::vector<MultiPoly> p;
    bool any = false;
    for (std::size_t col = 0; col <= A.size(); ++col) {
        MultiPoly minor = maximal_minor_without_column(A, col);
        if (col % 2 == 1) minor = -minor;
        any = any || !minor.is_zero();
        p.push_back(std::move(minor));
    }
    if (!any) throw Rejection("pole", "all maximal minors of the fiber matrix vanish");
    return p;
}

SatelliteParameterization satellite_parameterization(const SubmonoidalHypersurface& h) {
    const auto p = signed_minors(h);
    const VarsPtr& tv = param_vars(static_cast<std::size_t>(h.m));
    SatelliteParameterization s;
    for (int j = 0; j < h.m; ++j) s.forms.push_back(MultiPoly::variable(tv, static_cast<std::size_t>(j)) * p[0]);
    s.forms.insert(s.forms.end(), p.begin() + 1, p.end());
    for (const auto& f : s.forms)
        if (!f.is_zero()) s.raw_degree = f.total_degree();
    s.expected_raw_degree = (h.n + 2 - h.m) * (h.d - 2) + 1;
    s.cancelled = poly_gcd(s.forms);
    if (!s.cancelled.is_constant())
        for (auto& f : s.forms) f = exact_quotient(f, s.cancelled);
    for (const auto& f : s.forms)
        if (!f.is_zero()) s.reduced_degree = f.total_degree();
    return s;
}

MultiPoly point_polar(const SubmonoidalHypersurface& h) {
    if (h.m != h.n + 1) throw std::invalid_argument("point polar needs m = n+1");
    return h.l[0] + h.q[0][0] * xv(h.A.vars_ptr(), static_cast<std::size_t>(h.m));
}

namespace {

struct FiberData {
    PolyMatrix M;                 // in x-ring
    std::vector<MultiPoly> p;     // in x-ring
    std::vector<MultiPoly> v;     // (1, x_m, ..., x_{n+1})
};

FiberData fiber_data(const SubmonoidalHypersurface& h) {
    const VarsPtr& vars = h.A.vars_ptr();
    FiberData f;
    for (const auto& row : h.quadric_matrix()) {
        std::vector<MultiPoly> r;
        for (const auto& e : row) r.push_back(from_params(e, vars));
        f.M.push_back(std::move(r));
    }
    for (const auto& e : signed_minors(h)) f.p.push_back(from_params(e, vars));
    f.v.push_back(MultiPoly::constant(vars, 1));
    for (int i = h.m; i <= h.n + 1; ++i) f.v.push_back(xv(vars, static_cast<std::size_t>(i)));
    return f;
}

MultiPoly bilinear(const PolyMatrix& M, const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
    MultiPoly s(M[0][0].vars_ptr());
    for (std::size_t i = 0; i < a.size(); ++i) {
        MultiPoly row(s.vars_ptr());
        for (std::size_t j = 0; j < b.size(); ++j) row += M[i][j] * b[j];
        s += a[i] * row;
    }
    return s;
}

/// [x_j v0, v_1, ...] back in P^{n+1}.
RationalMap rehomogenize(const SubmonoidalHypersurface& h, const std::vector<MultiPoly>& v) {
    const VarsPtr& vars = h.A.vars_ptr();
    std::vector<MultiPoly> c;
    for (int j = 0; j < h.m; ++j) c.push_back(xv(vars, static_cast<std::size_t>(j)) * v[0]);
    c.insert(c.end(), v.begin() + 1, v.end());
    return RationalMap::make(std::move(c));
}

}  // namespace

RationalMap theta_general(const SubmonoidalHypersurface& h) {
    const FiberData f = fiber_data(h);
    const MultiPoly qp = bilinear(f.M, f.p, f.p);
    const MultiPoly bvp = bilinear(f.M, f.v, f.p);
    const FieldElement two(2);
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < f.v.size(); ++i) out.push_back(qp * f.v[i] - two * bvp * f.p[i]);
    return rehomogenize(h, out);
}

RationalMap theta_general_reduced(const SubmonoidalHypersurface& h) {
    RationalMap th = theta_general(h);
    const MultiPoly c = from_params(determinant(h.quadric_matrix()), h.A.vars_ptr());
    if (c.is_zero()) return th;
    for (auto& comp : th.components) comp = exact_quotient(comp, c);
    return th;
}

RationalMap theta_prime_general(const SubmonoidalHypersurface& h) {
    const FiberData f = fiber_data(h);
    const MultiPoly bvp = bilinear(f.M, f.v, f.p);
    const MultiPoly qv = bilinear(f.M, f.v, f.v);
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < f.v.size(); ++i) out.push_back(bvp * f.v[i] - qv * f.p[i]);
    return rehomogenize(h, out);
}

Point harmonic_conjugate(const BinaryPointPair& pair, const Point& x) {
    if (x.size() != 2) throw std::invalid_argument("points on a line have two coordinates");
    if (pair.alpha.is_zero() && pair.beta.is_zero() && pair.gamma.is_zero())
        throw std::invalid_argument("zero point pair");
    if (x[0].is_zero() && x[1].is_zero()) throw std::invalid_argument("zero point");
    Point out{pair.beta * x[0] + pair.gamma * x[1], -(pair.alpha * x[0] + pair.beta * x[1])};
    if (out[0].is_zero() && out[1].is_zero())
        throw std::domain_error("conjugate undefined: x is the double point of a square pair");
    return out;
}

Point apply_matrix(const Matrix2& m, const Point& x) {
    return {m[0][0] * x[0] + m[0][1] * x[1], m[1][0] * x[0] + m[1][1] * x[1]};
}

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
    Matrix2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

bool is_scalar(const Matrix2& m) { return m[0][1].is_zero() && m[1][0].is_zero() && m[0][0] == m[1][1]; }

LineInvolutions line_involutions(const Point& a, const Point& b, const Point& p) {
    const Matrix2 S{{{a[0], b[0]}, {a[1], b[1]}}};
    const FieldElement det = S[0][0] * S[1][1] - S[0][1] * S[1][0];
    if (det.is_zero()) throw std::invalid_argument("a and b coincide");
    const Matrix2 adj{{{S[1][1], -S[0][1]}, {-S[1][0], S[0][0]}}};
    // p = alpha a + beta b
    const Point ab = apply_matrix(adj, p);
    if (ab[0].is_zero() || ab[1].is_zero()) throw std::invalid_argument("p coincides with a or b");
    const FieldElement c = (ab[0] * ab[0]) / (ab[1] * ab[1]);
    const Matrix2 diag{{{FieldElement(1), FieldElement(0)}, {FieldElement(0), FieldElement(-1)}}};
    const Matrix2 swap{{{FieldElement(0), c}, {FieldElement(1), FieldElement(0)}}};
    return {multiply(multiply(S, diag), adj), multiply(multiply(S, swap), adj)};
}

long subspace_dimension_bound(int n, int m, int d) {
    if (m < 1 || m > n + 1 || d < 2) throw std::invalid_argument("need 1 <= m <= n+1 and d >= 2");
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n - m + d + 1), static_cast<unsigned long>(d));
    const mpz_class v = mpz_class((n + 2 - m) * m) - binom;
    if (!v.fits_slong_p()) throw std::overflow_error("dimension bound out of range");
    return v.get_si();
}

SubmonoidalHypersurface random_hypersurface(int n, int m, int d, std::uint64_t seed) {
    if (m < 1 || m > n + 1 || d < 2) throw std::invalid_argument("need 1 <= m <= n+1 and d >= 2");
    const VarsPtr& vars = projective_vars(static_cast<std::size_t>(n + 1));
    const auto mm = static_cast<std::size_t>(m);
    const std::size_t k = static_cast<std::size_t>(n + 2 - m);
    Rng rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        MultiPoly A = rng.form(vars, static_cast<unsigned>(d), mm, 5);
        std::vector<MultiPoly> l;
        for (std::size_t i = 0; i < k; ++i) l.push_back(rng.form(vars, static_cast<unsigned>(d - 1), mm, 5));
        std::vector<std::vector<MultiPoly>> q(k, std::vector<MultiPoly>(k, MultiPoly(vars)));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i; j < k; ++j)
                q[i][j] = q[j][i] = rng.form(vars, static_cast<unsigned>(d - 2), mm, 5);
        try {
            auto h = make_hypersurface(n, m, d, A, l, q);
            signed_minors(h);
            return h;
        } catch (const Rejection&) {
        }
    }
    throw std::runtime_error("could not sample a hypersurface");
}

}  // namespace msurf
