#include "msurf/exactalg/polyalg.hpp"

#include "msurf/exactalg/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace msurf {

DivisionResult divide(const MultiPoly& p, const MultiPoly& divisor) {
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (!p.same_ring(divisor)) throw std::invalid_argument("division across different rings");
    DivisionResult out{MultiPoly(p.vars_ptr()), MultiPoly(p.vars_ptr())};
    MultiPoly work = p;
    const Exponent& lead = divisor.leading_exponent();
    const FieldElement lc_inv = divisor.leading_coefficient().inverse();
    const std::size_t n = p.nvars();
    Exponent shift(n);
    while (!work.is_zero()) {
        const auto it = work.terms().begin();
        const Exponent e = it->first;
        const FieldElement c = it->second;
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] < lead[i]) {
                ok = false;
                break;
            }
            shift[i] = e[i] - lead[i];
        }
        if (!ok) {
            out.remainder.add_term(e, c);
            work.add_term(e, -c);
            continue;
        }
        const FieldElement q = c * lc_inv;
        out.quotient.add_term(shift, q);
        Exponent f(n);
        for (const auto& [de, dc] : divisor.terms()) {
            for (std::size_t i = 0; i < n; ++i) f[i] = de[i] + shift[i];
            work.add_term(f, -(q * dc));
        }
    }
    return out;
}

bool divides(const MultiPoly& divisor, const MultiPoly& p) { return divide(p, divisor).remainder.is_zero(); }

MultiPoly exact_quotient(const MultiPoly& p, const MultiPoly& divisor) {
    auto r = divide(p, divisor);
    if (!r.remainder.is_zero()) throw std::domain_error("division is not exact");
    return r.quotient;
}

namespace {

MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(p.vars_ptr(), 1); }

bool is_monomial(const MultiPoly& p) { return p.size() == 1; }

MultiPoly monomial_gcd(const MultiPoly& mono, const MultiPoly& q) {
    Exponent e = mono.leading_exponent();
    for (const auto& [qe, qc] : q.terms())
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], qe[i]);
    return MultiPoly::monomial(mono.vars_ptr(), e, 1);
}

int main_variable(const MultiPoly& p, const MultiPoly& q) {
    for (int i = static_cast<int>(p.nvars()) - 1; i >= 0; --i)
        if (p.degree_in(i) > 0 || q.degree_in(i) > 0) return i;
    return -1;
}

MultiPoly gcd_impl(const MultiPoly& p, const MultiPoly& q);

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
    MultiPoly g(p.vars_ptr());
    for (const auto& c : p.coefficients_in(var)) {
        if (c.is_zero()) continue;
        g = gcd_impl(g, c);
        if (g.is_constant()) return one_like(p);
    }
    return g;
}

MultiPoly leading_coeff_in(const MultiPoly& p, std::size_t var) {
    const int d = p.degree_in(var);
    MultiPoly r(p.vars_ptr());
    for (const auto& [e, c] : p.terms()) {
        if (static_cast<int>(e[var]) != d) continue;
        Exponent f = e;
        f[var] = 0;
        r.add_term(f, c);
    }
    return r;
}

MultiPoly var_power(const MultiPoly& like, std::size_t var, unsigned k) {
    Exponent e(like.nvars(), 0);
    e[var] = k;
    return MultiPoly::monomial(like.vars_ptr(), e, 1);
}

MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, std::size_t var) {
    const int db = b.degree_in(var);
    const MultiPoly lb = leading_coeff_in(b, var);
    while (!a.is_zero() && a.degree_in(var) >= db) {
        const int da = a.degree_in(var);
        const MultiPoly la = leading_coeff_in(a, var);
        a = lb * a - la * var_power(a, var, static_cast<unsigned>(da - db)) * b;
    }
    return a;
}

MultiPoly primitive_part(const MultiPoly& p, std::size_t var) {
    MultiPoly c = content_in(p, var);
    MultiPoly r = c.is_constant() ? p : exact_quotient(p, c);
    return r.monic();
}

MultiPoly gcd_impl(const MultiPoly& p, const MultiPoly& q) {
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    if (p.is_constant() || q.is_constant()) return one_like(p);
    if (is_monomial(p)) return monomial_gcd(p, q);
    if (is_monomial(q)) return monomial_gcd(q, p);
    const int vi = main_variable(p, q);
    const auto v = static_cast<std::size_t>(vi);
    if (p.degree_in(v) == 0) return gcd_impl(p, content_in(q, v));
    if (q.degree_in(v) == 0) return gcd_impl(content_in(p, v), q);

    const MultiPoly cp = content_in(p, v);
    const MultiPoly cq = content_in(q, v);
    const MultiPoly c = gcd_impl(cp, cq);
    MultiPoly a = (cp.is_constant() ? p : exact_quotient(p, cp)).monic();
    MultiPoly b = (cq.is_constant() ? q : exact_quotient(q, cq)).monic();
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    for (;;) {
        MultiPoly r = pseudo_remainder(a, b, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) <= 0) {
            b = one_like(p);
            break;
        }
        a = std::move(b);
        b = primitive_part(r, v);
    }
    return (c * b).monic();
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q) {
    if (!p.same_ring(q)) throw std::invalid_argument("gcd across different rings");
    return gcd_impl(p, q);
}

MultiPoly poly_gcd(const std::vector<MultiPoly>& ps) {
    if (ps.empty()) throw std::invalid_argument("gcd of an empty list");
    MultiPoly g(ps[0].vars_ptr());
    for (const auto& p : ps) {
        g = poly_gcd(g, p);
        if (!g.is_zero() && g.is_constant()) return g;
    }
    return g;
}

MultiPoly SquarefreeDecomposition::reconstruct(const VarsPtr& vars) const {
    MultiPoly r = MultiPoly::constant(vars, unit);
    for (const auto& f : factors) r *= f.factor.pow(f.multiplicity);
    return r;
}

MultiPoly SquarefreeDecomposition::part(unsigned multiplicity, const VarsPtr& vars) const {
    MultiPoly r = MultiPoly::constant(vars, 1);
    for (const auto& f : factors)
        if (f.multiplicity == multiplicity) r *= f.factor;
    return r;
}

unsigned SquarefreeDecomposition::max_multiplicity() const {
    unsigned m = 0;
    for (const auto& f : factors) m = std::max(m, f.multiplicity);
    return m;
}

namespace {

void require_binary(const MultiPoly& f, std::size_t u, std::size_t v) {
    if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero form");
    if (!f.is_homogeneous()) throw std::invalid_argument("expected a homogeneous binary form");
    const std::size_t allowed[] = {u, v};
    if (!f.involves_only(allowed)) throw std::invalid_argument("form involves more than two variables");
}

// Yun's algorithm for a polynomial in the single variable u.
std::vector<SquarefreeFactor> yun(const MultiPoly& f, std::size_t u) {
    std::vector<SquarefreeFactor> out;
    if (f.degree_in(u) <= 0) return out;
    const MultiPoly fp = f.derivative(u);
    const MultiPoly a0 = poly_gcd(f, fp);
    MultiPoly b = exact_quotient(f, a0);
    MultiPoly c = exact_quotient(fp, a0);
    MultiPoly d = c - b.derivative(u);
    unsigned i = 1;
    while (!b.is_constant()) {
        MultiPoly a = poly_gcd(b, d);
        if (!a.is_constant()) out.push_back({a.monic(), i});
        b = exact_quotient(b, a);
        c = exact_quotient(d, a);
        d = c - b.derivative(u);
        ++i;
    }
    return out;
}

MultiPoly homogenize(const MultiPoly& g, std::size_t u, std::size_t v) {
    const int e = g.degree_in(u);
    MultiPoly r(g.vars_ptr());
    for (const auto& [ex, c] : g.terms()) {
        Exponent f = ex;
        f[v] = static_cast<unsigned>(e) - ex[u];
        r.add_term(f, c);
    }
    return r;
}

}  // namespace

SquarefreeDecomposition squarefree_decomposition(const MultiPoly& f, std::size_t u, std::size_t v) {
    require_binary(f, u, v);
    const unsigned k = static_cast<unsigned>(f.min_degree_in(v));
    MultiPoly g(f.vars_ptr());
    for (const auto& [e, c] : f.terms()) {
        Exponent x = e;
        x[v] -= k;
        g.add_term(x, c);
    }
    std::map<unsigned, MultiPoly> by_mult;
    if (k > 0) by_mult.emplace(k, var_power(f, v, 1));
    for (auto& [fac, m] : yun(g.partial_evaluate(v, 1), u)) {
        MultiPoly h = homogenize(fac, u, v).monic();
        auto it = by_mult.find(m);
        if (it == by_mult.end()) {
            by_mult.emplace(m, h);
        } else {
            it->second = (it->second * h).monic();
        }
    }
    SquarefreeDecomposition out;
    MultiPoly prod = one_like(f);
    for (auto& [m, fac] : by_mult) {
        prod *= fac.pow(m);
        out.factors.push_back({fac, m});
    }
    out.unit = f.leading_coefficient() / prod.leading_coefficient();
    return out;
}

SquarefreeDecomposition squarefree_decomposition(const MultiPoly& f) {
    std::vector<std::size_t> used;
    for (std::size_t i = 0; i < f.nvars(); ++i)
        if (f.degree_in(i) > 0) used.push_back(i);
    if (used.size() > 2) throw std::invalid_argument("form involves more than two variables");
    std::size_t u = 0, v = 1;
    if (used.size() == 2) {
        u = used[0];
        v = used[1];
    } else if (used.size() == 1) {
        u = used[0];
        v = u == 0 ? 1 : 0;
    }
    if (f.nvars() < 2) throw std::invalid_argument("binary form needs two variables");
    return squarefree_decomposition(f, u, v);
}

MultiPoly squarefree_part(const MultiPoly& f, std::size_t u, std::size_t v) {
    const auto dec = squarefree_decomposition(f, u, v);
    MultiPoly r = one_like(f);
    for (const auto& x : dec.factors) r *= x.factor;
    return r;
}

bool is_squarefree(const MultiPoly& f, std::size_t u, std::size_t v) {
    if (f.is_zero()) return false;
    return squarefree_decomposition(f, u, v).max_multiplicity() <= 1;
}

MultiPoly determinant(const PolyMatrix& input) {
    const std::size_t n = input.size();
    for (const auto& row : input)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
    if (n == 1) return input[0][0];
    if (n == 2) return input[0][0] * input[1][1] - input[0][1] * input[1][0];
    PolyMatrix m = input;
    MultiPoly prev = one_like(m[0][0]);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return MultiPoly(input[0][0].vars_ptr());
            std::swap(m[r], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = prev.is_constant() ? t * prev.leading_coefficient().inverse() : exact_quotient(t, prev);
            }
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

namespace {

void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<MultiPoly> minors(const PolyMatrix& m, std::size_t k) {
    std::vector<MultiPoly> out;
    if (m.empty() || k == 0) return out;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<std::size_t>> rs, cs;
    combinations(rows, k, rs);
    combinations(cols, k, cs);
    for (const auto& r : rs) {
        for (const auto& c : cs) {
            PolyMatrix sub(k, std::vector<MultiPoly>(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
            out.push_back(determinant(sub));
        }
    }
    return out;
}

MultiPoly maximal_minor_without_column(const PolyMatrix& m, std::size_t col) {
    const std::size_t r = m.size();
    PolyMatrix sub(r);
    for (std::size_t i = 0; i < r; ++i) {
        if (m[i].size() != r + 1) throw std::invalid_argument("expected an r x (r+1) matrix");
        for (std::size_t j = 0; j <= r; ++j)
            if (j != col) sub[i].push_back(m[i][j]);
    }
    return determinant(sub);
}

MultiPoly minor_gcd_locus(const PolyMatrix& m, const MultiPoly& modulus, std::size_t r) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    MultiPoly g = modulus.monic();
    if (r + 1 > std::min(rows, cols)) return g;
    for (const auto& minor : minors(m, r + 1)) {
        g = poly_gcd(g, minor);
        if (g.is_constant()) break;
    }
    return g;
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
    if (!f.same_ring(g)) throw std::invalid_argument("resultant across different rings");
    const int m = f.degree_in(var);
    const int n = g.degree_in(var);
    if (m <= 0 || n <= 0) throw std::invalid_argument("resultant needs positive degree in the variable");
    const auto cf = f.coefficients_in(var);
    const auto cg = g.coefficients_in(var);
    const std::size_t size = static_cast<std::size_t>(m + n);
    PolyMatrix s(size, std::vector<MultiPoly>(size, MultiPoly(f.vars_ptr())));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = cf[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = cg[n - j];
    return determinant(s);
}

MultiPoly discriminant(const MultiPoly& f, std::size_t var) {
    const int n = f.degree_in(var);
    MultiPoly r = exact_quotient(resultant(f, f.derivative(var), var), leading_coeff_in(f, var));
    return (n * (n - 1) / 2) % 2 == 0 ? r : -r;
}

namespace {

std::vector<MultiPoly> binary_coefficients(const MultiPoly& f, unsigned deg, std::size_t u, std::size_t v) {
    std::vector<MultiPoly> c(deg + 1, MultiPoly(f.vars_ptr()));
    for (const auto& [e, x] : f.terms()) {
        if (e[u] + e[v] != deg) throw std::invalid_argument("form is not homogeneous of the stated degree");
        Exponent y = e;
        y[u] = 0;
        y[v] = 0;
        c[e[v]].add_term(y, x);
    }
    return c;
}

}  // namespace

MultiPoly binary_resultant(const MultiPoly& f, unsigned m, const MultiPoly& g, unsigned n, std::size_t u,
                           std::size_t v) {
    const auto cf = binary_coefficients(f, m, u, v);
    const auto cg = binary_coefficients(g, n, u, v);
    const std::size_t size = m + n;
    if (size == 0) return one_like(f);
    PolyMatrix s(size, std::vector<MultiPoly>(size, MultiPoly(f.vars_ptr())));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j <= m; ++j) s[i][i + j] = cf[j];
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j <= n; ++j) s[n + i][i + j] = cg[j];
    return determinant(s);
}

MultiPoly binary_discriminant(const MultiPoly& f, unsigned n, std::size_t u, std::size_t v) {
    if (n < 2) return one_like(f);
    // Res(f_u, f_v) = (-1)^(n(n-1)/2) n^(n-2) Disc(f)
    MultiPoly r = binary_resultant(f.derivative(u), n - 1, f.derivative(v), n - 1, u, v);
    Integer scale = 1;
    for (unsigned i = 2; i < n; ++i) scale *= n;
    if ((n * (n - 1) / 2) % 2 == 1) scale = -scale;
    return r * FieldElement(Rational(1) / Rational(scale));
}

MultiPoly linear_substitution(const MultiPoly& f, const FieldMatrix& m) {
    const std::size_t n = f.nvars();
    if (m.size() != n) throw std::invalid_argument("substitution matrix has wrong size");
    if (determinant(FieldMatrix(m)).is_zero()) throw std::invalid_argument("singular substitution matrix");
    std::vector<MultiPoly> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly img(f.vars_ptr());
        for (std::size_t j = 0; j < n; ++j) {
            Exponent e(n, 0);
            e[j] = 1;
            img.add_term(e, m[i][j]);
        }
        images.push_back(std::move(img));
    }
    return f.substitute(images);
}

}  // namespace msurf
