#pragma once

#include "msurf/cremona/cremona.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace msurf {

/// A + 2 sum l_i x_i + sum q_ij x_i x_j in P^{n+1}, the indices i, j running
/// over m..n+1. A, l, q are forms in x0..x(m-1), stored in the ring of
/// projective_vars(n+1); l[k] and q[k][*] refer to x_{m+k}.
struct SubmonoidalHypersurface {
    int n = 0;
    int m = 0;
    int d = 0;
    MultiPoly A;
    std::vector<MultiPoly> l;
    std::vector<std::vector<MultiPoly>> q;

    std::size_t fiber_vars() const { return static_cast<std::size_t>(n + 2 - m); }
    MultiPoly equation() const;
    /// Symmetric matrix [[A, l], [l, q]] of the fiber quadric, forms in x0..x(m-1).
    PolyMatrix quadric_matrix() const;
};

/// Validates degrees, symmetry, ranges and that q is not identically zero.
SubmonoidalHypersurface make_hypersurface(int n, int m, int d, MultiPoly A, std::vector<MultiPoly> l,
                                          std::vector<std::vector<MultiPoly>> q);
/// Reads the blocks off a polynomial in projective_vars(n+1). Rejection tags
/// as for surfaces: "degree", "multiplicity", "monoidal".
SubmonoidalHypersurface hypersurface_from_polynomial(const MultiPoly& F, int m);
/// The surface case (n, m) = (2, 2).
SubmonoidalHypersurface as_hypersurface(const SubmonoidalSurface& s);

/// Rows (l_i, q_{i,m}, ..., q_{i,n+1}), forms in t0..t(m-1).
PolyMatrix fiber_matrix(const SubmonoidalHypersurface& h);

struct SatelliteParameterization {
    std::vector<MultiPoly> forms;  // n+2 forms in t0..t(m-1), gcd removed
    MultiPoly cancelled;
    int raw_degree = 0;
    int reduced_degree = 0;
    int expected_raw_degree = 0;   // (n+2-m)(d-2)+1
};
/// Signed minor vector (Delta1, -Delta2, +Delta3, ...) in t0..t(m-1).
std::vector<MultiPoly> signed_minors(const SubmonoidalHypersurface& h);
SatelliteParameterization satellite_parameterization(const SubmonoidalHypersurface& h);

/// First polar with respect to Gamma when m = n+1: l + q x_{n+1}.
MultiPoly point_polar(const SubmonoidalHypersurface& h);

/// Fiberwise reflection v -> q(p)v - 2b(v,p)p, unreduced.
RationalMap theta_general(const SubmonoidalHypersurface& h);
/// theta_general with the factor det of the fiber quadric divided out; every
/// component carries it because M p = (det M, 0, ..., 0).
RationalMap theta_general_reduced(const SubmonoidalHypersurface& h);
/// Fiberwise harmonic map v -> b(v,p)v - q(v)p, unreduced.
RationalMap theta_prime_general(const SubmonoidalHypersurface& h);

/// alpha u^2 + 2 beta u v + gamma v^2.
struct BinaryPointPair {
    FieldElement alpha, beta, gamma;
};
/// The point x' with b(x, x') = 0. Throws std::domain_error when undefined.
Point harmonic_conjugate(const BinaryPointPair& pair, const Point& x);

using Matrix2 = std::array<std::array<FieldElement, 2>, 2>;
struct LineInvolutions {
    Matrix2 fixing;    // fixes a and b
    Matrix2 swapping;  // swaps a and b, fixes p
};
LineInvolutions line_involutions(const Point& a, const Point& b, const Point& p);
Point apply_matrix(const Matrix2& m, const Point& x);
Matrix2 multiply(const Matrix2& a, const Matrix2& b);
bool is_scalar(const Matrix2& m);

/// (n+2-m)m - C(n-m+d+1, d).
long subspace_dimension_bound(int n, int m, int d);

/// Random hypersurface with small integer coefficients.
SubmonoidalHypersurface random_hypersurface(int n, int m, int d, std::uint64_t seed);

}  // namespace msurf
