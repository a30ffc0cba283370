#include "msurf/monoidal/monoidal.hpp"

#include "msurf/exactalg/parse.hpp"
#include "msurf/exactalg/polyalg.hpp"
#include "msurf/exactalg/rings.hpp"

#include <array>

namespace msurf {

namespace {

MultiPoly xvar(std::size_t i) { return MultiPoly::variable(p3_vars(), i); }

void require_binary_form(const MultiPoly& f, int degree, const char* name) {
    const std::size_t allowed[] = {0, 1};
    if (!f.involves_only(allowed))
        throw Rejection("degree", std::string(name) + " must be a form in x0, x1");
    if (!f.is_zero() && (!f.is_homogeneous() || f.total_degree() != degree))
        throw Rejection("degree", std::string(name) + " must be homogeneous of degree " + std::to_string(degree));
}

}  // namespace

MultiPoly MonoidalSurface::equation() const { return A + xvar(2) * B + xvar(3) * C; }

MonoidalSurface monoidal_validate(const MultiPoly& A, const MultiPoly& B, const MultiPoly& C, int d) {
    if (d < 2) throw Rejection("degree", "d must be at least 2");
    const MultiPoly a = A.rename_into(p3_vars());
    const MultiPoly b = B.rename_into(p3_vars());
    const MultiPoly c = C.rename_into(p3_vars());
    require_binary_form(a, d, "A");
    require_binary_form(b, d - 1, "B");
    require_binary_form(c, d - 1, "C");
    if (b.is_zero() || c.is_zero() || (b.monic() == c.monic()))
        throw Rejection("cone", "B and C are proportional, the surface is a cone");
    const MultiPoly g = poly_gcd(std::vector<MultiPoly>{a, b, c});
    if (!g.is_constant()) throw Rejection("reducible", "A, B, C share the factor " + g.to_string());
    return MonoidalSurface{d, a, b, c};
}

const std::vector<std::string>& canonical_monoidal_kinds() {
    static const std::vector<std::string> kinds{"cubic-1",     "cubic-2",    "quartic-i",  "quartic-ii",
                                                "quartic-iii", "quartic-iv", "quartic-v",  "quartic-vi",
                                                "quartic-vii"};
    return kinds;
}

MonoidalSurface canonical_monoidal(std::string_view kind, std::optional<FieldElement> lambda) {
    auto P = [](const std::string& s) { return poly_parse(s, p3_vars(), Field{}); };
    const MultiPoly x0 = xvar(0), x1 = xvar(1);
    auto lambda_pair = [&](const FieldElement& l) {
        return std::pair{P("x0^3") + MultiPoly::constant(p3_vars(), l) * P("x0*x1^2"),
                         P("x1^3") + MultiPoly::constant(p3_vars(), l) * P("x0^2*x1")};
    };
    if (kind == "cubic-1") return monoidal_validate(P("0"), P("x0^2"), P("x1^2"), 3);
    if (kind == "cubic-2") return monoidal_validate(P("x1^3"), P("x0*x1"), P("x0^2"), 3);
    if (kind == "quartic-i" || kind == "quartic-ii") {
        if (!lambda) throw std::invalid_argument(std::string(kind) + " needs a value of lambda");
        const FieldElement l2 = *lambda * *lambda;
        if (l2.is_zero() || l2 == FieldElement(1) || l2 == FieldElement(9))
            throw std::invalid_argument("lambda^2 must avoid 0, 1, 9; got lambda = " + lambda->to_string());
        auto [b, c] = lambda_pair(*lambda);
        return monoidal_validate(kind == "quartic-i" ? P("x0^2*x1^2") : P("0"), b, c, 4);
    }
    if (kind == "quartic-iii" || kind == "quartic-iv") {
        auto [b, c] = lambda_pair(3);
        return monoidal_validate(kind == "quartic-iii" ? P("x0^2*x1^2") : P("0"), b, c, 4);
    }
    if (kind == "quartic-v") return monoidal_validate(P("x0^2*x1^2"), P("x0*(x0^2 + x1^2)"), P("x1*(x0^2 + x1^2)"), 4);
    if (kind == "quartic-vi")
        return monoidal_validate(P("x0^2*x1^2"), P("x0*(x0 + x1)^2"), P("x1*(x0 + x1)^2"), 4);
    if (kind == "quartic-vii")
        return monoidal_validate(P("x0^2*x1^2"), P("x0^2*(x0 + x1)"), P("x1^2*(x0 + x1)"), 4);
    throw std::invalid_argument("unknown canonical kind '" + std::string(kind) + "'");
}

MonoidalSigma sigma_curve_monoidal(const MonoidalSurface& s) {
    MonoidalSigma out;
    out.B = to_params(s.B, 2);
    out.C = to_params(s.C, 2);
    out.section_y1 = -out.C;
    out.section_y2 = out.B;
    out.fiber_gcd = poly_gcd(out.B, out.C);
    out.projection_degree = s.d - 1;
    return out;
}

MonoidalPinch pinch_divisor_monoidal(const MonoidalSurface& s) {
    MonoidalPinch out;
    MultiPoly b = to_params(s.B, 2);
    MultiPoly c = to_params(s.C, 2);
    out.common_factor = poly_gcd(b, c);
    if (!out.common_factor.is_constant()) {
        b = exact_quotient(b, out.common_factor);
        c = exact_quotient(c, out.common_factor);
    }
    // homogeneous Wronskian of the pencil (B, C)
    out.wronskian = b.derivative(0) * c.derivative(1) - b.derivative(1) * c.derivative(0);
    out.degree = out.wronskian.total_degree();
    out.squarefree = !out.wronskian.is_zero() && is_squarefree(out.wronskian, 0, 1);
    return out;
}

bool WebReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

WebReport monoidal_web_invariants(int d, int alpha, int beta) {
    if (d < 2 || alpha < 0 || beta < 0) throw std::invalid_argument("need d >= 2 and alpha, beta >= 0");
    WebReport r{d, alpha, beta, 2 * d - 1 - alpha, {}};
    auto add = [&](std::string name, long l, long rr) { r.checks.push_back({std::move(name), l, rr, l == rr}); };
    const int dp = r.d_prime;
    add("2*alpha + beta = 3(d-1)", 2L * alpha + beta, 3L * (d - 1));
    add("2*beta + alpha = 3(d'-1)", 2L * beta + alpha, 3L * (dp - 1));
    add("beta = 2d' - d - 1", beta, 2L * dp - d - 1);
    add("4(d-1) - (d-1) - 2*alpha - beta = 0", 4L * (d - 1) - (d - 1) - 2L * alpha - beta, 0);
    return r;
}

std::pair<int, int> pair_intersection_profile(int d) {
    if (d < 2) throw std::invalid_argument("need d >= 2");
    return {2 * d - 1, 2 * d - 2};
}

int moduli_dimension(SurfaceKind kind, int d) {
    if (kind == SurfaceKind::monoidal) {
        if (d < 4) throw std::invalid_argument("monoidal moduli count needs d >= 4");
        return 3 * d - 11;
    }
    if (d < 3) throw std::invalid_argument("submonoidal moduli count needs d >= 3");
    return 6 * d - 14;
}

}  // namespace msurf
