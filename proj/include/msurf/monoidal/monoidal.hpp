#pragma once

#include "msurf/errors.hpp"
#include "msurf/exactalg/multipoly.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace msurf {

/// Surface A(x0,x1) + x2*B(x0,x1) + x3*C(x0,x1) = 0 with the line V(x0,x1)
/// of multiplicity d-1. Forms live in the P^3 ring and involve x0, x1 only.
struct MonoidalSurface {
    int d = 0;
    MultiPoly A, B, C;

    MultiPoly equation() const;
};

/// Checks degrees, non-proportionality of B and C, and gcd(A,B,C) = 1.
/// Throws Rejection tagged "degree", "cone" or "reducible".
MonoidalSurface monoidal_validate(const MultiPoly& A, const MultiPoly& B, const MultiPoly& C, int d);

/// Kinds: cubic-1, cubic-2, quartic-i ... quartic-vii. lambda is needed for
/// quartic-i and quartic-ii and must satisfy lambda^2 not in {0, 1, 9}.
MonoidalSurface canonical_monoidal(std::string_view kind, std::optional<FieldElement> lambda = std::nullopt);
const std::vector<std::string>& canonical_monoidal_kinds();

/// Sigma on the exceptional divisor: B(t) y1 + C(t) y2 = 0, with the section
/// t -> [-C(t), B(t)]. fiber_gcd is gcd(B, C); nonconstant means Sigma
/// contains fiber components.
struct MonoidalSigma {
    MultiPoly B, C;  // in t0, t1
    MultiPoly section_y1, section_y2;
    MultiPoly fiber_gcd;
    int projection_degree = 0;  // degree of Sigma -> Gamma
};
MonoidalSigma sigma_curve_monoidal(const MonoidalSurface& s);

/// Branch divisor of t -> [-C(t), B(t)] via the Wronskian B C' - B' C
/// (in t0, t1). When B and C share a factor it is removed first and
/// reported in common_factor.
struct MonoidalPinch {
    MultiPoly wronskian;
    MultiPoly common_factor;
    int degree = 0;
    bool squarefree = false;
};
MonoidalPinch pinch_divisor_monoidal(const MonoidalSurface& s);

struct IdentityCheck {
    std::string name;
    long left = 0;
    long right = 0;
    bool pass = false;
};

struct WebReport {
    int d = 0, alpha = 0, beta = 0, d_prime = 0;
    std::vector<IdentityCheck> checks;
    bool all_pass() const;
};
WebReport monoidal_web_invariants(int d, int alpha, int beta);

/// (residual curve degree 2d-1, points on Gamma 2d-2).
std::pair<int, int> pair_intersection_profile(int d);

enum class SurfaceKind { monoidal, submonoidal };
/// 3d-11 (monoidal, d >= 4) or 6d-14 (submonoidal, d >= 3).
int moduli_dimension(SurfaceKind kind, int d);

}  // namespace msurf
