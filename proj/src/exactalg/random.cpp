#include "msurf/exactalg/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace msurf {

long Rng::uniform(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    // rejection sampling keeps the mapping exact and portable
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
        x = gen_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
}

MultiPoly Rng::binary_form(const VarsPtr& vars, unsigned degree, long bound, std::size_t u, std::size_t v) {
    MultiPoly p(vars);
    for (unsigned i = 0; i <= degree; ++i) {
        Exponent e(p.nvars(), 0);
        e[u] = degree - i;
        e[v] = i;
        p.add_term(e, uniform(-bound, bound));
    }
    return p;
}

MultiPoly Rng::form(const VarsPtr& vars, unsigned degree, std::size_t k, long bound) {
    MultiPoly p(vars);
    for (const auto& e : monomials_of_degree(p.nvars(), k, degree)) p.add_term(e, uniform(-bound, bound));
    return p;
}

namespace {

void rec(std::size_t n, std::size_t k, std::size_t i, unsigned left, Exponent& cur, std::vector<Exponent>& out) {
    if (i + 1 == k) {
        cur[i] = left;
        out.push_back(cur);
        cur[i] = 0;
        return;
    }
    for (unsigned a = left + 1; a-- > 0;) {
        cur[i] = a;
        rec(n, k, i + 1, left - a, cur, out);
    }
    cur[i] = 0;
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t n, std::size_t k, unsigned degree) {
    std::vector<Exponent> out;
    if (k == 0 || k > n) {
        if (k == 0 && degree == 0) out.push_back(Exponent(n, 0));
        return out;
    }
    Exponent cur(n, 0);
    rec(n, k, 0, degree, cur, out);
    return out;
}

}  // namespace msurf
