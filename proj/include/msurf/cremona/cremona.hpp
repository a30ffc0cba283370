#pragma once

#include "msurf/exactalg/random.hpp"
#include "msurf/submonoidal/submonoidal.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace msurf {

/// Homogeneous components of equal degree, defined up to a common scalar.
struct RationalMap {
    std::vector<MultiPoly> components;
    bool reduced = false;

    /// Validates homogeneity, equal degrees and that some component is nonzero.
    static RationalMap make(std::vector<MultiPoly> components);
    std::size_t dimension() const { return components.size() - 1; }
    int degree() const;
    MultiPoly common_factor() const;
    /// Divides out the gcd of the components.
    RationalMap reduce() const;
    Point apply(const Point& p) const;
    /// this(inner(x)).
    RationalMap compose(const RationalMap& inner) const;
};

/// Component vectors are proportional as polynomial vectors (all 2x2
/// cross-minors vanish identically).
bool projectively_equal(const RationalMap& a, const RationalMap& b);

struct PoleMinors {
    MultiPoly d1, d2, d3;  // in t0, t1
};
/// Delta1 = DF - E^2, Delta2 = -(BF - CE), Delta3 = BE - CD.
PoleMinors pole_minors(const SubmonoidalSurface& s);

struct SatelliteCurve {
    std::array<MultiPoly, 4> forms;  // in t0, t1
    MultiPoly cancelled;
    int degree = 0;
    bool generic_degree = false;     // degree == 2d - 3
};
SatelliteCurve satellite_curve(const SubmonoidalSurface& s);
/// Evaluates the satellite parameterization at a parameter value.
Point satellite_point(const SatelliteCurve& c, const Point& t);

/// (-x0 D1, -x1 D1, x2 D1 - 2 D2, x3 D1 - 2 D3), unreduced.
RationalMap theta(const SubmonoidalSurface& s);
/// (x0 (F D1 - P), x1 (F D1 - P), F D2 - P x2, F D3 - P x3), unreduced.
RationalMap theta_prime(const SubmonoidalSurface& s);

struct InvarianceToken {
    bool divisible = false;
    int quotient_degree = -1;
    std::string witness;  // leading monomial of the remainder on failure
};
/// Checks F | F(map).
InvarianceToken verify_surface_invariance(const RationalMap& map, const MultiPoly& F);

/// x_i' x_j - x_j' x_i for i < j, each reduced modulo F.
struct CrossMinorReport {
    int checked = 0;
    int divisible = 0;
    bool pass() const { return checked > 0 && checked == divisible; }
};
CrossMinorReport verify_cross_minors(const RationalMap& map, const MultiPoly& F);

enum class InvolutionMethod { symbolic, sampled };

struct InvolutionVerdict {
    bool pass = false;
    InvolutionMethod method = InvolutionMethod::symbolic;
    int points_passed = 0;
    int points_tried = 0;
    int resampled = 0;
    std::string detail;
};
/// gamma_codim: points whose first gamma_codim coordinates vanish are skipped.
InvolutionVerdict verify_involution(const RationalMap& map, InvolutionMethod method, std::uint64_t seed = 1,
                                    int points = 20, std::size_t gamma_codim = 2);

/// a(b(x)) proportional to b(a(x)) at sampled points.
InvolutionVerdict verify_commute(const RationalMap& a, const RationalMap& b, std::uint64_t seed = 1, int points = 20,
                                 std::size_t gamma_codim = 2);

/// Random surface of degree d through the given points, coefficients solved
/// exactly. Throws std::invalid_argument with 6d-2 or more points.
SubmonoidalSurface sample_surface(int d, const std::vector<Point>& through, std::uint64_t seed);

/// Random point of P^n with small integer coordinates, first m coordinates not all zero.
Point random_point(Rng& rng, std::size_t n, std::size_t m, long bound = 9);

}  // namespace msurf
