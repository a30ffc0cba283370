#include "doctest.h"
#include "helpers.hpp"

#include <algorithm>

#include "msurf/exactalg/rings.hpp"
#include "msurf/submonoidal/submonoidal.hpp"

using namespace msurf;
using testing::T;
using testing::X;

namespace {

SubmonoidalSurface eckardt() {
    return submonoidal_from_polynomial(X("2*x0^2*x2 + 2*x1^2*x3 + x0*x2^2 + x1*x3^2"), X("x0"), X("x1")).surface;
}

SubmonoidalSurface generic4() {
    return make_submonoidal(4, X("x0^4 - 2*x0^3*x1 + 3*x1^4"), X("x0^3 + x0*x1^2 - x1^3"), X("2*x0^2*x1 - x1^3 + x0^3"),
                            X("x0^2 + 3*x0*x1 - x1^2"), X("x0^2 - x1^2 + 2*x0*x1"), X("2*x0^2 - x0*x1 + x1^2"));
}

}  // namespace

TEST_CASE("extraction of the Eckardt cubic") {
    const auto s = eckardt();
    CHECK(s.d == 3);
    CHECK(s.A.is_zero());
    CHECK(s.B == X("x0^2"));
    CHECK(s.C == X("x1^2"));
    CHECK(s.D == X("x0"));
    CHECK(s.E.is_zero());
    CHECK(s.F == X("x1"));
    CHECK(s.equation() == X("2*x0^2*x2 + 2*x1^2*x3 + x0*x2^2 + x1*x3^2"));
}

TEST_CASE("extraction rejections") {
    try {
        submonoidal_from_polynomial(X("x0*x2^3 + x1^4"), X("x0"), X("x1"));
        FAIL("expected rejection");
    } catch (const Rejection& r) {
        CHECK(r.invariant() == "multiplicity");
    }
    try {
        submonoidal_from_polynomial(X("x0^2*x2 + x1^2*x3"), X("x0"), X("x1"));
        FAIL("expected rejection");
    } catch (const Rejection& r) {
        CHECK(r.invariant() == "monoidal");
    }
    CHECK_THROWS_AS(submonoidal_from_polynomial(X("x0*x2^2 + x1^3"), X("x0"), X("2*x0")), Rejection);
}

TEST_CASE("discriminants of the Eckardt cubic") {
    const auto s = eckardt();
    const MultiPoly P = discriminant_P(s);
    CHECK(P == T("-t0*t1*(t0^3 + t1^3)"));
    CHECK(small_discriminant_R(s) == T("-t0*t1"));
    const auto f = classify_fibers(s);
    CHECK(f.s1 == 5);
    CHECK(f.s2 == 0);
    CHECK(f.s3 == 0);
    CHECK(check_nondegenerate(s).pass);
    CHECK(eckardt_locus(s) == T("t0*t1"));
}

TEST_CASE("degenerate cases") {
    const auto s = make_submonoidal(4, X("0"), X("0"), X("0"), X("0"), X("x0^2"), X("0"));
    CHECK(discriminant_P(s).is_zero());
    CHECK_THROWS_AS(classify_fibers(s), Rejection);
    const auto v = check_nondegenerate(s);
    CHECK_FALSE(v.pass);
    CHECK(v.unchecked.size() == 1);
    CHECK(small_discriminant_R(s) == T("t0^4"));
    const auto w = check_nondegenerate(make_submonoidal(4, X("x1^4"), X("x0^3"), X("x1^3"), X("0"), X("x0^2"), X("0")));
    CHECK(std::find(w.failed.begin(), w.failed.end(), "R is nonzero and squarefree") != w.failed.end());
}

TEST_CASE("Cayley cubic through a line missing the nodes") {
    const MultiPoly cayley = X("x0*x1*x2 + x0*x1*x3 + x0*x2*x3 + x1*x2*x3");
    const auto s = submonoidal_from_polynomial(cayley, X("x0 + x1"), X("x2 + x3")).surface;
    const auto f = classify_fibers(s);
    CHECK(f.s1 == 1);
    CHECK(f.s2 == 0);
    CHECK(f.s3 == 2);
    CHECK(f.nodes == 4);
}

TEST_CASE("generic quartic sample") {
    const auto s = generic4();
    CHECK(discriminant_P(s).total_degree() == 8);
    const MultiPoly R = small_discriminant_R(s);
    CHECK(R.total_degree() == 4);
    CHECK(is_squarefree(R, 0, 1));
    CHECK(eckardt_locus(s).is_constant());
    const auto p = pinch_divisor(s);
    CHECK(p.degree == 4);
    const auto f = classify_fibers(s);
    CHECK(f.s1 + 2 * f.s2 + 2 * f.s3 == 8);
}

TEST_CASE("engineered Eckardt root") {
    // at t = [0,1]: B = C = 0 and R vanishes
    const auto s = make_submonoidal(4, X("x1^4 + x0^4"), X("x0^3"), X("x0*x1^2 + x0^3"), X("x1^2 + x0*x1"), X("x0*x1"),
                                    X("x0^2 + x0*x1"));
    CHECK(small_discriminant_R(s).evaluate(std::vector<FieldElement>{0, 1}).is_zero());
    CHECK(divides(T("t0"), eckardt_locus(s)));
}

TEST_CASE("pinch divisor degree for d = 5 and a pure D case") {
    const auto s = make_submonoidal(5, X("x0^5 + x1^5"), X("x0^4 - x1^4"), X("x0^3*x1 + x1^4"),
                                    X("x0^3 + 2*x1^3 - x0*x1^2"), X("x0^2*x1 - x1^3 + x0^3"), X("x0^3 - x0*x1^2 + 4*x1^3"));
    CHECK(pinch_divisor(s).degree == 8);
    const auto t = make_submonoidal(4, X("x0^4"), X("x1^3"), X("x0^3"), X("x0^2 - x1^2"), X("0"), X("0"));
    const auto p = pinch_divisor(t);
    // discriminant of D = t0^2 - t1^2 is nonzero, so the divisor is a power of y1
    CHECK(p.divisor.size() == 1);
    CHECK(p.divisor.degree_in(0) == 4);
    const auto u = make_submonoidal(4, X("x0^4"), X("x1^3"), X("x0^3"), X("x0^2"), X("0"), X("0"));
    CHECK(pinch_divisor(u).divisor.is_zero());
}

TEST_CASE("Pluecker package") {
    const auto pl = pluecker_surface();
    CHECK(pl.surface.d == 4);
    CHECK(pl.determinant_quartic.total_degree() == 4);
    for (std::size_t i = 0; i < pl.nodes.size(); ++i) {
        CAPTURE(pl.node_names[i]);
        CHECK(is_singular_point(pl.determinant_quartic, pl.nodes[i]));
        CHECK(is_singular_point(pl.surface.equation(), pl.nodes_normalized[i]));
    }
    const auto inc = verify_incidence(pl.nodes, pl.tropes);
    for (int c : inc.point_counts) CHECK(c == 4);
    for (int c : inc.hyperplane_counts) CHECK(c == 4);
    const auto inc2 = verify_incidence(pl.nodes_normalized, pl.tropes_normalized);
    CHECK(inc2.matrix == inc.matrix);

    const auto f = classify_fibers(pl.surface);
    CHECK(f.s1 == 0);
    CHECK(f.s2 == 0);
    CHECK(f.s3 == 4);
    CHECK(f.nodes == 8);
    REQUIRE(f.P_factors.factors.size() == 1);
    CHECK(f.P_factors.factors[0].multiplicity == 2);
    CHECK(check_nondegenerate(pl.surface).pass);

    // each torsal plane holds a pair of nodes
    for (const auto& plane : pl.torsal_planes) {
        int count = 0;
        for (const auto& n : pl.nodes) count += plane.evaluate(n).is_zero();
        CHECK(count == 2);
    }
}

TEST_CASE("incidence edge cases") {
    const auto r = verify_incidence({{1, 0, 0, 0}}, {X("x1")});
    CHECK(r.matrix[0][0]);
    const auto pl = pluecker_surface();
    auto nodes = pl.nodes;
    nodes[3][1] += FieldElement(1);
    const auto inc = verify_incidence(nodes, pl.tropes);
    CHECK(inc.point_counts[3] < 4);
    CHECK_THROWS(verify_incidence({{0, 0, 0, 0}}, {X("x1")}));
}
