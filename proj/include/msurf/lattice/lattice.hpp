#pragma once

#include <map>
#include <vector>

namespace msurf {

/// Integer class over the basis e0, e1, ..., e_{3d-3} with e0^2 = 1,
/// ei^2 = -1 for i >= 1 and zero mixed products.
struct LatticeClass {
    int d = 0;
    std::vector<long> c;

    static LatticeClass zero(int d);
    static LatticeClass basis(int d, int i);
    std::size_t rank() const { return c.size(); }
    int last() const { return static_cast<int>(c.size()) - 1; }  // index of e_{3d-3}

    LatticeClass operator+(const LatticeClass& o) const;
    LatticeClass operator-(const LatticeClass& o) const;
    LatticeClass operator*(long k) const;
    bool operator==(const LatticeClass& o) const = default;
};

long intersection_number(const LatticeClass& a, const LatticeClass& b);

struct StandardClasses {
    LatticeClass H, Sigma, K, fiber;
};
StandardClasses standard_classes(int d);

/// n e0 - sum_{i in I} ei - (n-1) e_{3d-3}, #I = 2n, I within 1..3d-4.
struct SpecialSection {
    int n = 0;
    std::vector<int> I;
    LatticeClass cls;
};
SpecialSection make_special_section(int d, int n, std::vector<int> I);
/// Reads a class back as a special section; false when it has another shape.
bool as_special_section(const LatticeClass& c, SpecialSection& out);

struct SpecialSectionCensus {
    int d = 0;
    std::map<int, std::vector<SpecialSection>> by_n;  // n = 0 is the class e_{3d-3}
    std::size_t total() const;
};
SpecialSectionCensus enumerate_special_sections(int d);

/// (m-1)H - (m-2)Sigma - E for d = 2m.
SpecialSection dual_section(const SpecialSection& s, int d);
/// Action of the involution attached to the satellite pencil, d = 2m.
LatticeClass tau_action(const LatticeClass& a);

/// sum of C(3d-4, 2n) over n.
unsigned long long even_binomial_sum(int d);

}  // namespace msurf
