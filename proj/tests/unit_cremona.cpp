#include "doctest.h"
#include "helpers.hpp"

#include "msurf/cremona/cremona.hpp"
#include "msurf/exactalg/linalg.hpp"
#include "msurf/exactalg/rings.hpp"

using namespace msurf;
using testing::T;
using testing::X;

namespace {

SubmonoidalSurface eckardt() {
    return submonoidal_from_polynomial(X("2*x0^2*x2 + 2*x1^2*x3 + x0*x2^2 + x1*x3^2"), X("x0"), X("x1")).surface;
}

bool on_surface(const MultiPoly& F, const Point& p) { return F.evaluate(p).is_zero(); }

}  // namespace

TEST_CASE("rational map validation and reduction") {
    CHECK_THROWS(RationalMap::make({X("x0"), X("x1^2"), X("x2"), X("x3")}));
    CHECK_THROWS(RationalMap::make({X("0"), X("0"), X("0"), X("0")}));
    CHECK_THROWS(RationalMap::make({X("x0 + x1^2"), X("x1"), X("x2"), X("x3")}));
    const auto m = RationalMap::make({X("x0*x1"), X("x1^2"), X("x1*x2"), X("x1*x3")});
    CHECK(m.degree() == 2);
    CHECK(m.common_factor() == X("x1"));
    const auto r = m.reduce();
    CHECK(r.reduced);
    CHECK(r.degree() == 1);
    CHECK(projectively_equal(m, r));
}

TEST_CASE("four-cycle is not an involution") {
    const auto cyc = RationalMap::make({X("x1"), X("x2"), X("x3"), X("x0")});
    CHECK_FALSE(verify_involution(cyc, InvolutionMethod::symbolic).pass);
    CHECK_FALSE(verify_involution(cyc, InvolutionMethod::sampled, 7).pass);
    const auto swap = RationalMap::make({X("x1"), X("x0"), X("x3"), X("x2")});
    CHECK(verify_involution(swap, InvolutionMethod::symbolic).pass);
    CHECK(verify_involution(swap, InvolutionMethod::sampled, 7).pass);
}

TEST_CASE("pole minors and satellite of the Eckardt cubic") {
    const auto s = eckardt();
    const auto m = pole_minors(s);
    CHECK(m.d1 == T("t0*t1"));
    CHECK(m.d2 == T("-t0^2*t1"));
    CHECK(m.d3 == T("-t0*t1^2"));
    const auto c = satellite_curve(s);
    CHECK(c.cancelled == T("t0*t1"));
    CHECK(c.forms[0] == T("t0"));
    CHECK(c.forms[1] == T("t1"));
    CHECK(c.forms[2] == T("-t0"));
    CHECK(c.forms[3] == T("-t1"));
    CHECK(c.degree == 1);
    CHECK_FALSE(c.generic_degree);
}

TEST_CASE("generic satellite degree") {
    for (int d = 3; d <= 5; ++d) {
        const auto c = satellite_curve(sample_surface(d, {}, 100 + d));
        CHECK(c.degree == 2 * d - 3);
        CHECK(c.generic_degree);
    }
}

TEST_CASE("theta on the Eckardt cubic") {
    const auto s = eckardt();
    const auto th = theta(s);
    CHECK(th.degree() == 3);
    const auto inv = verify_surface_invariance(th, s.equation());
    CHECK(inv.divisible);
    CHECK(inv.quotient_degree == 3 * (2 * 3 - 4));
    CHECK(verify_involution(th, InvolutionMethod::symbolic).pass);
    CHECK(verify_involution(th, InvolutionMethod::sampled, 3).pass);
}

TEST_CASE("theta invariance for quartics and quintics") {
    for (int d = 3; d <= 4; ++d) {
        const auto s = sample_surface(d, {}, 40 + d);
        const auto inv = verify_surface_invariance(theta(s), s.equation());
        CHECK(inv.divisible);
        CHECK(inv.quotient_degree == d * (2 * d - 4));
    }
    const auto s5 = sample_surface(5, {}, 9);
    CHECK(verify_involution(theta(s5), InvolutionMethod::sampled, 5).pass);
}

TEST_CASE("corrupted map fails invariance with a witness") {
    const auto s = eckardt();
    auto th = theta(s);
    th.components[2] += X("x3^3");
    const auto inv = verify_surface_invariance(th, s.equation());
    CHECK_FALSE(inv.divisible);
    CHECK_FALSE(inv.witness.empty());
    CHECK_FALSE(verify_involution(th, InvolutionMethod::sampled, 2).pass);
}

TEST_CASE("theta prime fixes the surface pointwise") {
    for (int d = 3; d <= 4; ++d) {
        const auto s = sample_surface(d, {}, 60 + d);
        const auto tp = theta_prime(s);
        CHECK(tp.degree() == 3 * d - 3);
        CHECK(verify_cross_minors(tp, s.equation()).pass());
        CHECK(verify_involution(tp, InvolutionMethod::sampled, 11).pass);
        CHECK(verify_commute(theta(s), tp, 13).pass);
    }
    const Point p{FieldElement(1), FieldElement(2), FieldElement(-1), FieldElement(3)};
    const auto s = sample_surface(4, {p}, 5);
    CHECK(on_surface(s.equation(), p));
    const auto img = theta_prime(s).apply(p);
    CHECK(projectively_equal(img, p));
}

TEST_CASE("theta prime needs P nonzero") {
    const auto s = make_submonoidal(4, X("0"), X("0"), X("0"), X("0"), X("x0^2"), X("0"));
    CHECK_THROWS_AS(theta_prime(s), Rejection);
}

TEST_CASE("sampling through points") {
    std::vector<Point> pts;
    Rng rng(3);
    for (int i = 0; i < 10; ++i) pts.push_back(random_point(rng, 3, 2));
    const auto s = sample_surface(3, pts, 1);
    for (const auto& p : pts) CHECK(on_surface(s.equation(), p));
    for (int i = 0; i < 6; ++i) pts.push_back(random_point(rng, 3, 2));
    CHECK(pts.size() == 16);
    CHECK_THROWS_AS(sample_surface(3, pts, 1), std::invalid_argument);
    pts.pop_back();
    CHECK_NOTHROW(sample_surface(3, pts, 1));
    CHECK(sample_surface(4, {}, 77).equation() == sample_surface(4, {}, 77).equation());
}
