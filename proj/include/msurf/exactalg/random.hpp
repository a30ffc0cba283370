#pragma once

#include "msurf/exactalg/multipoly.hpp"

#include <cstdint>
#include <random>

namespace msurf {

/// Seeded generator with a platform-independent range mapping (the standard
/// distributions are implementation-defined, which would break golden files).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);
    /// Random binary form of the given degree in variables (u, v) of the ring,
    /// coefficients in [-bound, bound].
    MultiPoly binary_form(const VarsPtr& vars, unsigned degree, long bound, std::size_t u = 0, std::size_t v = 1);
    /// Random form of the given degree in the first k variables.
    MultiPoly form(const VarsPtr& vars, unsigned degree, std::size_t k, long bound);
    std::uint64_t next() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

/// All exponent vectors of total degree `degree` in the first k of n variables, grlex descending.
std::vector<Exponent> monomials_of_degree(std::size_t n, std::size_t k, unsigned degree);

}  // namespace msurf
