#include "doctest.h"
#include "helpers.hpp"

#include "msurf/exactalg/linalg.hpp"
#include "msurf/exactalg/polyalg.hpp"
#include "msurf/monoidal/monoidal.hpp"

using namespace msurf;
using testing::T;
using testing::X;

TEST_CASE("monoidal validation") {
    CHECK_NOTHROW(monoidal_validate(X("0"), X("x0^2"), X("x1^2"), 3));
    CHECK_NOTHROW(monoidal_validate(X("x1^3"), X("x0*x1"), X("x0^2"), 3));
    try {
        monoidal_validate(X("0"), X("x0^2"), X("2*x0^2"), 3);
        FAIL("expected rejection");
    } catch (const Rejection& r) {
        CHECK(r.invariant() == "cone");
    }
    try {
        monoidal_validate(X("x0^3"), X("x0*x1"), X("x0^2"), 3);
        FAIL("expected rejection");
    } catch (const Rejection& r) {
        CHECK(r.invariant() == "reducible");
    }
    try {
        monoidal_validate(X("x0^2"), X("x0*x1"), X("x1^2"), 3);
        FAIL("expected rejection");
    } catch (const Rejection& r) {
        CHECK(r.invariant() == "degree");
    }
}

TEST_CASE("canonical monoidal equations") {
    CHECK(canonical_monoidal("cubic-1").equation() == X("x0^2*x2 + x1^2*x3"));
    CHECK(canonical_monoidal("cubic-2").equation() == X("x1^3 + x0*x1*x2 + x0^2*x3"));
    CHECK(canonical_monoidal("quartic-i", FieldElement(2)).equation() ==
          X("x0^2*x1^2 + (x0^3 + 2*x0*x1^2)*x2 + (x1^3 + 2*x0^2*x1)*x3"));
    CHECK(canonical_monoidal("quartic-iii").equation() == X("x0^2*x1^2 + (x0^3 + 3*x0*x1^2)*x2 + (x1^3 + 3*x0^2*x1)*x3"));
    CHECK(canonical_monoidal("quartic-v").equation() == X("x0^2*x1^2 + (x0^2 + x1^2)*(x0*x2 + x1*x3)"));
    CHECK(canonical_monoidal("quartic-vii").equation() == X("x0^2*x1^2 + (x0 + x1)*(x0^2*x2 + x1^2*x3)"));
    CHECK_THROWS(canonical_monoidal("quartic-i", FieldElement(1)));
    CHECK_THROWS(canonical_monoidal("quartic-ii", FieldElement(-3)));
    CHECK_THROWS(canonical_monoidal("quartic-i"));
    CHECK_THROWS(canonical_monoidal("quartic-x"));
}

TEST_CASE("quartic canonical forms have the swap symmetry") {
    FieldMatrix swap(4, std::vector<FieldElement>(4));
    swap[0][1] = swap[1][0] = swap[2][3] = swap[3][2] = 1;
    for (const auto& kind : canonical_monoidal_kinds()) {
        CAPTURE(kind);
        if (kind.rfind("quartic", 0) != 0) continue;
        const auto s = canonical_monoidal(kind, FieldElement(2));
        CHECK(linear_substitution(s.equation(), swap) == s.equation());
    }
}

TEST_CASE("sigma curve") {
    const auto s1 = sigma_curve_monoidal(canonical_monoidal("cubic-1"));
    CHECK(s1.B == T("t0^2"));
    CHECK(s1.C == T("t1^2"));
    CHECK(s1.section_y1 == T("-t1^2"));
    CHECK(s1.section_y2 == T("t0^2"));
    CHECK(s1.fiber_gcd.is_constant());
    CHECK(s1.projection_degree == 2);
    const auto s2 = sigma_curve_monoidal(canonical_monoidal("cubic-2"));
    CHECK(s2.fiber_gcd == T("t0"));
}

TEST_CASE("monoidal pinch divisor") {
    const auto p = pinch_divisor_monoidal(canonical_monoidal("cubic-1"));
    CHECK(p.wronskian == T("4*t0*t1"));
    CHECK(p.degree == 2);
    for (int d = 3; d <= 7; ++d) {
        const auto s = monoidal_validate(X("0"), X("x0^" + std::to_string(d - 1)), X("x1^" + std::to_string(d - 1)), d);
        const auto w = pinch_divisor_monoidal(s);
        CHECK(w.degree == 2 * d - 4);
        CHECK(w.wronskian.size() == 1);
    }
    const auto q = monoidal_validate(X("x0^5 + x1^5 - x0^2*x1^3"), X("x0^4 - 3*x0*x1^3 + 2*x1^4"),
                                     X("x0^3*x1 + 5*x0^2*x1^2 - x1^4"), 5);
    const auto w = pinch_divisor_monoidal(q);
    CHECK(w.degree == 6);
    CHECK(w.squarefree);
    // shared factor is reported and removed
    const auto v = pinch_divisor_monoidal(canonical_monoidal("quartic-v"));
    CHECK(v.common_factor == T("t0^2 + t1^2"));
}

TEST_CASE("web invariants") {
    const auto qc = monoidal_web_invariants(2, 0, 3);
    CHECK(qc.d_prime == 3);
    CHECK(qc.all_pass());
    for (int d = 3; d <= 12; ++d) CHECK(monoidal_web_invariants(d, d - 1, d - 1).all_pass());
    const auto bad = monoidal_web_invariants(3, 0, 0);
    CHECK_FALSE(bad.checks[0].pass);
    CHECK(bad.checks[0].left == 0);
    CHECK(bad.checks[0].right == 6);
    // jacobian balance follows from cond1 on the whole grid
    for (int d = 2; d <= 12; ++d)
        for (int a = 0; a <= 3 * d; ++a) {
            const int b = 3 * (d - 1) - 2 * a;
            if (b < 0) continue;
            const auto r = monoidal_web_invariants(d, a, b);
            if (r.checks[0].pass && r.checks[2].pass) CHECK(r.checks[3].pass);
        }
}

TEST_CASE("small formulas") {
    CHECK(pair_intersection_profile(3) == std::pair{5, 4});
    CHECK(pair_intersection_profile(2) == std::pair{3, 2});
    CHECK(pair_intersection_profile(10) == std::pair{19, 18});
    CHECK(moduli_dimension(SurfaceKind::monoidal, 4) == 1);
    CHECK(moduli_dimension(SurfaceKind::submonoidal, 4) == 10);
    CHECK(moduli_dimension(SurfaceKind::submonoidal, 3) == 4);
    CHECK_THROWS(moduli_dimension(SurfaceKind::monoidal, 3));
}
