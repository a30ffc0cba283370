#include "msurf/lattice/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace msurf {

LatticeClass LatticeClass::zero(int d) {
    if (d < 3) throw std::invalid_argument("lattice needs d >= 3");
    return LatticeClass{d, std::vector<long>(static_cast<std::size_t>(3 * d - 2), 0)};
}

LatticeClass LatticeClass::basis(int d, int i) {
    LatticeClass r = zero(d);
    r.c.at(static_cast<std::size_t>(i)) = 1;
    return r;
}

LatticeClass LatticeClass::operator+(const LatticeClass& o) const {
    if (o.c.size() != c.size()) throw std::invalid_argument("lattice rank mismatch");
    LatticeClass r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

LatticeClass LatticeClass::operator-(const LatticeClass& o) const { return *this + o * -1; }

LatticeClass LatticeClass::operator*(long k) const {
    LatticeClass r = *this;
    for (auto& x : r.c) x *= k;
    return r;
}

long intersection_number(const LatticeClass& a, const LatticeClass& b) {
    if (a.c.size() != b.c.size() || a.c.empty()) throw std::invalid_argument("lattice rank mismatch");
    long s = a.c[0] * b.c[0];
    for (std::size_t i = 1; i < a.c.size(); ++i) s -= a.c[i] * b.c[i];
    return s;
}

namespace {

// a e0 - sum_{1..3d-4} ei - b e_{3d-3}
LatticeClass shape(int d, long a, long b, long sign_of_points = -1) {
    LatticeClass r = LatticeClass::zero(d);
    r.c[0] = a;
    for (int i = 1; i < r.last(); ++i) r.c[i] = sign_of_points;
    r.c[r.last()] = -b;
    return r;
}

}  // namespace

StandardClasses standard_classes(int d) {
    StandardClasses s;
    s.H = shape(d, d, d - 2);
    s.Sigma = shape(d, d - 1, d - 3);
    s.K = shape(d, -3, -1, 1);
    s.fiber = LatticeClass::basis(d, 0) - LatticeClass::basis(d, 3 * d - 3);
    return s;
}

SpecialSection make_special_section(int d, int n, std::vector<int> I) {
    std::sort(I.begin(), I.end());
    if (n < 0 || static_cast<int>(I.size()) != 2 * n) throw std::invalid_argument("special section needs #I = 2n");
    LatticeClass c = LatticeClass::zero(d);
    c.c[0] = n;
    for (int i : I) {
        if (i < 1 || i > 3 * d - 4) throw std::invalid_argument("index outside 1..3d-4");
        if (c.c[i] != 0) throw std::invalid_argument("repeated index");
        c.c[i] = -1;
    }
    c.c[c.last()] = -(n - 1);
    return SpecialSection{n, std::move(I), std::move(c)};
}

bool as_special_section(const LatticeClass& c, SpecialSection& out) {
    const long n = c.c[0];
    if (c.c[c.last()] != -(n - 1)) return false;
    std::vector<int> I;
    for (int i = 1; i < c.last(); ++i) {
        if (c.c[i] == -1) I.push_back(i);
        else if (c.c[i] != 0) return false;
    }
    if (static_cast<long>(I.size()) != 2 * n) return false;
    out = SpecialSection{static_cast<int>(n), std::move(I), c};
    return true;
}

std::size_t SpecialSectionCensus::total() const {
    std::size_t t = 0;
    for (const auto& [n, v] : by_n) t += v.size();
    return t;
}

SpecialSectionCensus enumerate_special_sections(int d) {
    if (d < 3) throw std::invalid_argument("lattice needs d >= 3");
    const int points = 3 * d - 4;
    SpecialSectionCensus census;
    census.d = d;
    for (int n = 0; 2 * n <= points; ++n) {
        auto& bucket = census.by_n[n];
        // subsets of size 2n in lexicographic order
        std::vector<int> idx(2 * n);
        for (int i = 0; i < 2 * n; ++i) idx[i] = i + 1;
        for (;;) {
            bucket.push_back(make_special_section(d, n, idx));
            int k = 2 * n;
            while (k > 0 && idx[k - 1] == points - (2 * n - k)) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (int j = k; j < 2 * n; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return census;
}

SpecialSection dual_section(const SpecialSection& s, int d) {
    if (d % 2 != 0) throw std::invalid_argument("dual special sections need even d");
    const int m = d / 2;
    const auto st = standard_classes(d);
    const LatticeClass c = st.H * (m - 1) - st.Sigma * (m - 2) - s.cls;
    SpecialSection out;
    if (!as_special_section(c, out)) throw std::logic_error("dual class is not a special section");
    return out;
}

LatticeClass tau_action(const LatticeClass& a) {
    const int d = a.d;
    if (d % 2 != 0) throw std::invalid_argument("tau needs even d");
    const int m = d / 2;
    const LatticeClass img0 = shape(d, 3 * m - 1, 3 * m - 2);
    const LatticeClass imgL = shape(d, 3 * m - 2, 3 * m - 3);
    LatticeClass r = img0 * a.c[0] + imgL * a.c[a.last()];
    for (int i = 1; i < a.last(); ++i) {
        if (a.c[i] == 0) continue;
        LatticeClass img = LatticeClass::basis(d, 0) - LatticeClass::basis(d, i) - LatticeClass::basis(d, a.last());
        r = r + img * a.c[i];
    }
    return r;
}

unsigned long long even_binomial_sum(int d) {
    const int n = 3 * d - 4;
    unsigned long long sum = 0, binom = 1;  // C(n, k)
    for (int k = 0; k <= n; ++k) {
        if (k % 2 == 0) sum += binom;
        binom = binom * static_cast<unsigned long long>(n - k) / static_cast<unsigned long long>(k + 1);
    }
    return sum;
}

}  // namespace msurf
