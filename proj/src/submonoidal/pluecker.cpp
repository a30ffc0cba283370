#include "msurf/exactalg/linalg.hpp"
#include "msurf/exactalg/parse.hpp"
#include "msurf/exactalg/rings.hpp"
#include "msurf/submonoidal/submonoidal.hpp"

namespace msurf {

PlueckerData pluecker_surface() {
    const Field K = Field::quadratic(-3);
    auto P = [&](const std::string& s) { return poly_parse(s, p3_vars(), K); };
    PlueckerData out;

    const PolyMatrix m{{P("0"), P("x0 - x1 + x2"), P("x0 - x1 + x3"), P("x0")},
                       {P("x0 - x1 + x2"), P("0"), P("x3"), P("x1")},
                       {P("x0 - x1 + x3"), P("x3"), P("0"), P("x2")},
                       {P("x0"), P("x1"), P("x2"), P("0")}};
    out.determinant_quartic = determinant(m);
    out.line = {P("x0 - x1"), P("x2")};
    const Extraction ex = submonoidal_from_polynomial(out.determinant_quartic, out.line[0], out.line[1]);
    out.normalization = ex.normalization;
    out.surface = ex.surface;

    const FieldElement w = FieldElement::generator(-3);
    const FieldElement e = (FieldElement(1) + w) * FieldElement::ratio(1, 2);
    const FieldElement eb = (FieldElement(1) - w) * FieldElement::ratio(1, 2);
    out.node_names = {"P1", "P2", "P3", "P4", "P1'", "P2'", "P3'", "P4'"};
    out.nodes = {{0, e, 1, 0},  {0, eb, 1, 0}, {0, 1, 1, 1},  {1, 0, 0, 0},
                 {-1, 0, eb, 1}, {-1, 0, e, 1}, {1, 0, -1, 0}, {0, 1, 0, 1}};
    out.tropes = {P("x0"),
                  P("x1"),
                  P("x3"),
                  P("x0 + x3 - x1"),
                  P("(1/2 + 1/2*w)*x2 + (1/2 - 1/2*w)*x3 - x1"),
                  P("(1/2 - 1/2*w)*x2 + (1/2 + 1/2*w)*x3 - x1"),
                  P("x0 + x2 - (1/2 - 1/2*w)*(x1 - x3)"),
                  P("x0 + x2 - (1/2 + 1/2*w)*(x1 - x3)")};
    const FieldMatrix Ninv = *inverse(out.normalization);
    for (const auto& p : out.nodes) out.nodes_normalized.push_back(mat_vec(out.normalization, p));
    for (const auto& t : out.tropes) out.tropes_normalized.push_back(linear_substitution(t, Ninv));
    out.torsal_finite = {e, eb, FieldElement(1)};
    for (const auto& t : out.torsal_finite)
        out.torsal_planes.push_back(P("x0 - x1") + MultiPoly::constant(p3_vars(), t) * P("x2"));
    out.torsal_planes.push_back(P("x2"));
    return out;
}

}  // namespace msurf
