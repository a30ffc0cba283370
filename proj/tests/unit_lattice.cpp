#include "doctest.h"

#include "msurf/lattice/lattice.hpp"

#include <random>

using namespace msurf;

TEST_CASE("standard classes") {
    for (int d = 3; d <= 8; ++d) {
        CAPTURE(d);
        const auto s = standard_classes(d);
        CHECK(intersection_number(s.Sigma, s.Sigma) == d - 4);
        CHECK(intersection_number(s.K, s.K) == 12 - 3 * d);
        CHECK(s.K == s.H * (d - 4) - s.Sigma * (d - 3));
        CHECK(intersection_number(s.H, s.H) == d);
        CHECK(intersection_number(s.fiber, s.fiber) == 0);
    }
    const auto s4 = standard_classes(4);
    CHECK(intersection_number(s4.H, s4.Sigma) == 2);
}

TEST_CASE("special section census for quartics") {
    const auto c = enumerate_special_sections(4);
    CHECK(c.total() == 128);
    CHECK(c.by_n.at(0).size() == 1);
    CHECK(c.by_n.at(1).size() == 28);
    CHECK(c.by_n.at(2).size() == 70);
    CHECK(c.by_n.at(3).size() == 28);
    CHECK(c.by_n.at(4).size() == 1);
    const auto st = standard_classes(4);
    for (const auto& [n, v] : c.by_n)
        for (const auto& s : v) {
            CHECK(intersection_number(s.cls, s.cls) == -1);
            CHECK(intersection_number(s.cls, st.K) == -1);
            CHECK(intersection_number(s.cls, st.fiber) == 1);
            CHECK(intersection_number(s.cls, st.H) == 2);
            CHECK(intersection_number(s.cls, st.Sigma) == 1);
        }
}

TEST_CASE("census counts") {
    CHECK(enumerate_special_sections(3).total() == 16);
    for (int d = 3; d <= 8; ++d) CHECK(even_binomial_sum(d) == (1ULL << (3 * d - 5)));
}

TEST_CASE("dual sections") {
    const auto s = dual_section(make_special_section(4, 1, {1, 2}), 4);
    CHECK(s.n == 3);
    CHECK(s.I == std::vector<int>{3, 4, 5, 6, 7, 8});
    const auto full = dual_section(make_special_section(4, 4, {1, 2, 3, 4, 5, 6, 7, 8}), 4);
    CHECK(full.n == 0);
    CHECK(full.cls == LatticeClass::basis(4, 9));
    for (const auto& [n, v] : enumerate_special_sections(4).by_n)
        for (const auto& x : v) CHECK(dual_section(dual_section(x, 4), 4).cls == x.cls);
    CHECK_THROWS(dual_section(make_special_section(5, 1, {1, 2}), 5));
}

TEST_CASE("tau") {
    for (int d : {4, 6}) {
        CAPTURE(d);
        const auto st = standard_classes(d);
        CHECK(tau_action(st.H) == st.H);
        for (int i = 0; i < 3 * d - 2; ++i) {
            const auto e = LatticeClass::basis(d, i);
            CHECK(tau_action(tau_action(e)) == e);
        }
        std::mt19937_64 rng(11);
        for (int k = 0; k < 20; ++k) {
            LatticeClass a = LatticeClass::zero(d), b = LatticeClass::zero(d);
            for (auto& x : a.c) x = static_cast<long>(rng() % 11) - 5;
            for (auto& x : b.c) x = static_cast<long>(rng() % 11) - 5;
            CHECK(intersection_number(tau_action(a), tau_action(b)) == intersection_number(a, b));
        }
    }
    for (const auto& [n, v] : enumerate_special_sections(4).by_n)
        for (const auto& x : v) CHECK(tau_action(x.cls) == dual_section(x, 4).cls);
    CHECK_THROWS(tau_action(LatticeClass::zero(5)));
}
