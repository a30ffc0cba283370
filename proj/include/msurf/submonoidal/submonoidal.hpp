#pragma once

#include "msurf/errors.hpp"
#include "msurf/exactalg/polyalg.hpp"

#include <array>
#include <string>
#include <vector>

namespace msurf {

/// A + 2B x2 + 2C x3 + D x2^2 + 2E x2 x3 + F x3^2 = 0, Gamma = V(x0, x1).
/// Forms live in the P^3 ring and involve x0, x1 only.
struct SubmonoidalSurface {
    int d = 0;
    MultiPoly A, B, C, D, E, F;

    MultiPoly equation() const;
    /// [[A,B,C],[B,D,E],[C,E,F]] in t0, t1.
    PolyMatrix conic_matrix() const;
    /// [[B,D,E],[C,E,F]] in t0, t1.
    PolyMatrix pole_matrix() const;
};

/// Validates declared degrees and (D,E,F) != 0. Throws Rejection.
SubmonoidalSurface make_submonoidal(int d, const MultiPoly& A, const MultiPoly& B, const MultiPoly& C,
                                    const MultiPoly& D, const MultiPoly& E, const MultiPoly& F);

/// Coordinates x' = N x sending V(l1, l2) to V(x0', x1'); rows of N are l1,
/// l2 and then standard basis vectors picked greedily.
FieldMatrix line_normalization(const MultiPoly& l1, const MultiPoly& l2);

struct Extraction {
    SubmonoidalSurface surface;
    FieldMatrix normalization;   // N
    MultiPoly transformed;       // F(N^-1 x')
};
/// Moves the line to V(x0, x1) and reads off A..F. Rejection tags:
/// "degree", "line", "multiplicity", "monoidal".
Extraction submonoidal_from_polynomial(const MultiPoly& F, const MultiPoly& l1, const MultiPoly& l2);

/// det of the conic matrix, in t0, t1: zero or degree 3d-4.
MultiPoly discriminant_P(const SubmonoidalSurface& s);
/// E^2 - D F, in t0, t1.
MultiPoly small_discriminant_R(const SubmonoidalSurface& s);

struct FiberReport {
    MultiPoly P;
    SquarefreeDecomposition P_factors;
    int s1 = 0, s2 = 0, s3 = 0;
    int nodes = 0;
    /// Roots are parameters of double-line fibers.
    MultiPoly third_kind_locus;
    /// Descriptions of strata where P has multiplicity >= 3.
    std::vector<std::string> high_multiplicity;
    MultiPoly R;
    bool R_squarefree = false;
};
/// Throws Rejection("degenerate") when P = 0.
FiberReport classify_fibers(const SubmonoidalSurface& s);

struct Verdict {
    bool pass = false;
    std::vector<std::string> passed;
    std::vector<std::string> failed;
    std::vector<std::string> unchecked;
};
Verdict check_nondegenerate(const SubmonoidalSurface& s);

/// gcd of sqfree(R) with the 2x2 minors of the pole matrix; throws when R = 0.
MultiPoly eckardt_locus(const SubmonoidalSurface& s);

struct PinchReport {
    MultiPoly divisor;       // in y1, y2
    MultiPoly common_factor; // gcd(D, E, F) in t0, t1
    int degree = -1;
};
const VarsPtr& pinch_vars();
/// Discriminant in t of D y1^2 + 2E y1 y2 + F y2^2; needs d >= 4.
PinchReport pinch_divisor(const SubmonoidalSurface& s);

using Point = std::vector<FieldElement>;

struct IncidenceReport {
    std::vector<std::vector<bool>> matrix;  // [point][hyperplane]
    std::vector<int> point_counts;
    std::vector<int> hyperplane_counts;
};
IncidenceReport verify_incidence(const std::vector<Point>& points, const std::vector<MultiPoly>& hyperplanes);

/// True when F and all partial derivatives vanish at p.
bool is_singular_point(const MultiPoly& F, const Point& p);

struct PlueckerData {
    MultiPoly determinant_quartic;            // original coordinates
    std::array<MultiPoly, 2> line;            // x0 - x1, x2
    FieldMatrix normalization;
    SubmonoidalSurface surface;               // normalized coordinates, over Q(w), w^2 = -3
    std::vector<std::string> node_names;
    std::vector<Point> nodes;                 // original coordinates
    std::vector<Point> nodes_normalized;
    std::vector<MultiPoly> tropes;            // original coordinates
    std::vector<MultiPoly> tropes_normalized;
    std::vector<FieldElement> torsal_finite;  // t with V(x0 - x1 + t x2) torsal
    bool torsal_at_infinity = true;           // V(x2) as well
    std::vector<MultiPoly> torsal_planes;     // original coordinates
};
PlueckerData pluecker_surface();

}  // namespace msurf
