#include "msurf/cremona/cremona.hpp"

#include "msurf/exactalg/linalg.hpp"
#include "msurf/exactalg/rings.hpp"

#include <stdexcept>

namespace msurf {

RationalMap RationalMap::make(std::vector<MultiPoly> components) {
    if (components.size() < 2) throw std::invalid_argument("a rational map needs at least two components");
    int deg = -1;
    for (const auto& c : components) {
        if (!c.same_ring(components[0])) throw std::invalid_argument("map components live in different rings");
        if (c.is_zero()) continue;
        if (!c.is_homogeneous()) throw std::invalid_argument("map component is not homogeneous");
        if (deg >= 0 && c.total_degree() != deg) throw std::invalid_argument("map components have different degrees");
        deg = c.total_degree();
    }
    if (deg < 0) throw std::invalid_argument("all map components vanish");
    return RationalMap{std::move(components), false};
}

int RationalMap::degree() const {
    for (const auto& c : components)
        if (!c.is_zero()) return c.total_degree();
    return -1;
}

MultiPoly RationalMap::common_factor() const { return poly_gcd(components); }

RationalMap RationalMap::reduce() const {
    const MultiPoly g = common_factor();
    RationalMap r{components, true};
    if (!g.is_constant())
        for (auto& c : r.components) c = exact_quotient(c, g);
    return r;
}

Point RationalMap::apply(const Point& p) const {
    Point out;
    out.reserve(components.size());
    for (const auto& c : components) out.push_back(c.evaluate(p));
    return out;
}

RationalMap RationalMap::compose(const RationalMap& inner) const {
    std::vector<MultiPoly> out;
    out.reserve(components.size());
    for (const auto& c : components) out.push_back(c.substitute(inner.components));
    return make(std::move(out));
}

bool projectively_equal(const RationalMap& a, const RationalMap& b) {
    if (a.components.size() != b.components.size()) return false;
    const std::size_t n = a.components.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(a.components[i] * b.components[j] - a.components[j] * b.components[i]).is_zero()) return false;
    return true;
}

namespace {

struct XMinors {
    MultiPoly d1, d2, d3;
};

XMinors x_minors(const SubmonoidalSurface& s) {
    return {s.D * s.F - s.E * s.E, -(s.B * s.F - s.C * s.E), s.B * s.E - s.C * s.D};
}

MultiPoly xv(std::size_t i) { return MultiPoly::variable(p3_vars(), i); }

}  // namespace

PoleMinors pole_minors(const SubmonoidalSurface& s) {
    const XMinors m = x_minors(s);
    if (m.d1.is_zero() && m.d2.is_zero() && m.d3.is_zero())
        throw Rejection("pole", "all three pole minors vanish identically");
    return {to_params(m.d1, 2), to_params(m.d2, 2), to_params(m.d3, 2)};
}

SatelliteCurve satellite_curve(const SubmonoidalSurface& s) {
    const PoleMinors m = pole_minors(s);
    const MultiPoly t0 = MultiPoly::variable(t_vars(), 0), t1 = MultiPoly::variable(t_vars(), 1);
    SatelliteCurve c;
    c.forms = {t0 * m.d1, t1 * m.d1, m.d2, m.d3};
    c.cancelled = poly_gcd(std::vector<MultiPoly>(c.forms.begin(), c.forms.end()));
    if (!c.cancelled.is_constant())
        for (auto& f : c.forms) f = exact_quotient(f, c.cancelled);
    for (const auto& f : c.forms)
        if (!f.is_zero()) c.degree = f.total_degree();
    c.generic_degree = c.degree == 2 * s.d - 3;
    return c;
}

Point satellite_point(const SatelliteCurve& c, const Point& t) {
    Point out;
    for (const auto& f : c.forms) out.push_back(f.evaluate(t));
    return out;
}

RationalMap theta(const SubmonoidalSurface& s) {
    pole_minors(s);
    const XMinors m = x_minors(s);
    const MultiPoly two = MultiPoly::constant(p3_vars(), 2);
    return RationalMap::make({-(xv(0) * m.d1), -(xv(1) * m.d1), xv(2) * m.d1 - two * m.d2, xv(3) * m.d1 - two * m.d3});
}

RationalMap theta_prime(const SubmonoidalSurface& s) {
    pole_minors(s);
    const XMinors m = x_minors(s);
    const MultiPoly P = from_params(discriminant_P(s), p3_vars());
    if (P.is_zero()) throw Rejection("degenerate", "P = 0, the second involution is undefined");
    const MultiPoly F = s.equation();
    const MultiPoly u = F * m.d1 - P;
    return RationalMap::make({xv(0) * u, xv(1) * u, F * m.d2 - P * xv(2), F * m.d3 - P * xv(3)});
}

InvarianceToken verify_surface_invariance(const RationalMap& map, const MultiPoly& F) {
    InvarianceToken t;
    const MultiPoly image = F.substitute(map.components);
    const DivisionResult r = divide(image, F);
    t.divisible = r.remainder.is_zero();
    if (t.divisible) {
        t.quotient_degree = r.quotient.total_degree();
    } else {
        t.witness = MultiPoly::monomial(r.remainder.vars_ptr(), r.remainder.leading_exponent(),
                                        r.remainder.leading_coefficient())
                        .to_string();
    }
    return t;
}

CrossMinorReport verify_cross_minors(const RationalMap& map, const MultiPoly& F) {
    CrossMinorReport r;
    const std::size_t n = map.components.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const MultiPoly xi = MultiPoly::variable(F.vars_ptr(), i), xj = MultiPoly::variable(F.vars_ptr(), j);
            const MultiPoly minor = map.components[i] * xj - map.components[j] * xi;
            ++r.checked;
            r.divisible += divides(F, minor);
        }
    return r;
}

Point random_point(Rng& rng, std::size_t n, std::size_t m, long bound) {
    for (;;) {
        Point p;
        bool off_gamma = false;
        for (std::size_t i = 0; i <= n; ++i) {
            p.push_back(rng.uniform(-bound, bound));
            if (i < m && !p.back().is_zero()) off_gamma = true;
        }
        if (off_gamma) return p;
    }
}

namespace {

bool is_zero_point(const Point& p) {
    for (const auto& x : p)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace

InvolutionVerdict verify_involution(const RationalMap& map, InvolutionMethod method, std::uint64_t seed, int points,
                                    std::size_t gamma_codim) {
    InvolutionVerdict v;
    v.method = method;
    if (method == InvolutionMethod::symbolic) {
        const RationalMap sq = map.compose(map);
        const auto& vars = map.components[0].vars_ptr();
        std::optional<MultiPoly> G;
        for (std::size_t i = 0; i < sq.components.size() && !G; ++i) {
            const auto r = divide(sq.components[i], MultiPoly::variable(vars, i));
            if (r.remainder.is_zero() && !r.quotient.is_zero()) G = r.quotient;
        }
        if (!G) {
            v.detail = "no component of the square is a multiple of its coordinate";
            return v;
        }
        for (std::size_t i = 0; i < sq.components.size(); ++i) {
            if (sq.components[i] != *G * MultiPoly::variable(vars, i)) {
                v.detail = "component " + std::to_string(i) + " of the square is not G*x" + std::to_string(i);
                return v;
            }
        }
        v.pass = true;
        v.detail = "square equals G*x with deg G = " + std::to_string(G->total_degree());
        return v;
    }
    Rng rng(seed);
    const std::size_t n = map.dimension();
    const int cap = points * 20;
    int attempts = 0;
    while (v.points_tried < points && attempts < cap) {
        ++attempts;
        const Point x = random_point(rng, n, gamma_codim);
        const Point y = map.apply(x);
        if (is_zero_point(y)) {
            ++v.resampled;
            continue;
        }
        const Point z = map.apply(y);
        if (is_zero_point(z)) {
            ++v.resampled;
            continue;
        }
        ++v.points_tried;
        v.points_passed += msurf::projectively_equal(z, x);
    }
    v.pass = v.points_tried == points && v.points_passed == points;
    v.detail = std::to_string(v.points_passed) + "/" + std::to_string(points) + " points return";
    return v;
}

InvolutionVerdict verify_commute(const RationalMap& a, const RationalMap& b, std::uint64_t seed, int points,
                                 std::size_t gamma_codim) {
    InvolutionVerdict v;
    v.method = InvolutionMethod::sampled;
    Rng rng(seed);
    int attempts = 0;
    while (v.points_tried < points && attempts < points * 20) {
        ++attempts;
        const Point x = random_point(rng, a.dimension(), gamma_codim);
        const Point bx = b.apply(x), ax = a.apply(x);
        if (is_zero_point(bx) || is_zero_point(ax)) {
            ++v.resampled;
            continue;
        }
        const Point abx = a.apply(bx), bax = b.apply(ax);
        if (is_zero_point(abx) || is_zero_point(bax)) {
            ++v.resampled;
            continue;
        }
        ++v.points_tried;
        v.points_passed += msurf::projectively_equal(abx, bax);
    }
    v.pass = v.points_tried == points && v.points_passed == points;
    v.detail = std::to_string(v.points_passed) + "/" + std::to_string(points) + " points commute";
    return v;
}

SubmonoidalSurface sample_surface(int d, const std::vector<Point>& through, std::uint64_t seed) {
    if (d < 3) throw std::invalid_argument("sample_surface needs d >= 3");
    const std::size_t unknowns = static_cast<std::size_t>(6 * d - 2);
    if (through.size() >= unknowns)
        throw std::invalid_argument("over-constrained: " + std::to_string(through.size()) + " points for " +
                                    std::to_string(unknowns) + " coefficients");
    // coefficient slots: (block, x0-exponent); blocks A,B,C,D,E,F with
    // x2/x3 weights matching the surface equation
    struct Slot {
        int block;
        unsigned a;
    };
    const int deg[6] = {d, d - 1, d - 1, d - 2, d - 2, d - 2};
    std::vector<Slot> slots;
    for (int b = 0; b < 6; ++b)
        for (int a = deg[b]; a >= 0; --a) slots.push_back({b, static_cast<unsigned>(a)});

    auto monomial_value = [&](const Slot& s, const Point& p) {
        const unsigned b = static_cast<unsigned>(deg[s.block]) - s.a;
        FieldElement v = p[0].pow(s.a) * p[1].pow(b);
        switch (s.block) {
            case 1: return v * FieldElement(2) * p[2];
            case 2: return v * FieldElement(2) * p[3];
            case 3: return v * p[2] * p[2];
            case 4: return v * FieldElement(2) * p[2] * p[3];
            case 5: return v * p[3] * p[3];
            default: return v;
        }
    };
    FieldMatrix sys;
    for (const auto& p : through) {
        if (p.size() != 4) throw std::invalid_argument("points must have four coordinates");
        std::vector<FieldElement> row;
        for (const auto& s : slots) row.push_back(monomial_value(s, p));
        sys.push_back(std::move(row));
    }
    const auto basis = sys.empty() ? std::vector<std::vector<FieldElement>>{} : nullspace(sys, unknowns);
    if (!sys.empty() && basis.empty()) throw std::invalid_argument("inconsistent point conditions");
    Rng rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<FieldElement> coeffs(unknowns);
        if (sys.empty()) {
            for (auto& c : coeffs) c = rng.uniform(-5, 5);
        } else {
            for (const auto& v : basis) {
                const FieldElement k = rng.uniform(-5, 5);
                for (std::size_t i = 0; i < unknowns; ++i) coeffs[i] += k * v[i];
            }
        }
        std::array<MultiPoly, 6> forms{MultiPoly(p3_vars()), MultiPoly(p3_vars()), MultiPoly(p3_vars()),
                                       MultiPoly(p3_vars()), MultiPoly(p3_vars()), MultiPoly(p3_vars())};
        for (std::size_t i = 0; i < unknowns; ++i)
            forms[slots[i].block].add_term(
                {slots[i].a, static_cast<unsigned>(deg[slots[i].block]) - slots[i].a, 0, 0}, coeffs[i]);
        if (forms[3].is_zero() && forms[4].is_zero() && forms[5].is_zero()) continue;
        return make_submonoidal(d, forms[0], forms[1], forms[2], forms[3], forms[4], forms[5]);
    }
    throw std::runtime_error("could not sample a surface with (D,E,F) != 0");
}

}  // namespace msurf
