#include "msurf/exactalg/rings.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace msurf {

namespace {

const VarsPtr& cached(char prefix, std::size_t count) {
    static std::mutex mu;
    static std::map<std::pair<char, std::size_t>, VarsPtr> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{prefix, count}];
    if (!slot) {
        VarList names;
        for (std::size_t i = 0; i < count; ++i) names.push_back(std::string(1, prefix) + std::to_string(i));
        slot = MultiPoly::make_vars(std::move(names));
    }
    return slot;
}

}  // namespace

const VarsPtr& projective_vars(std::size_t n) { return cached('x', n + 1); }
const VarsPtr& param_vars(std::size_t m) { return cached('t', m); }

MultiPoly to_params(const MultiPoly& f, std::size_t m) {
    std::vector<std::size_t> map(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        if (i >= m && f.degree_in(i) > 0) throw std::invalid_argument("form involves a non-parameter variable");
        map[i] = i < m ? i : 0;
    }
    return f.remap(param_vars(m), map);
}

MultiPoly from_params(const MultiPoly& f, const VarsPtr& target) {
    if (target->size() < f.nvars()) throw std::invalid_argument("target ring too small");
    std::vector<std::size_t> map(f.nvars());
    std::iota(map.begin(), map.end(), std::size_t{0});
    return f.remap(target, map);
}

}  // namespace msurf
