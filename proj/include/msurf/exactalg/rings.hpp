#pragma once

#include "msurf/exactalg/multipoly.hpp"

namespace msurf {

/// Shared variable lists, so polynomials built in different places land in
/// the same ring. Projective space P^n uses x0..xn; parameter spaces use t0..t(m-1).
const VarsPtr& projective_vars(std::size_t n);
const VarsPtr& param_vars(std::size_t m);
inline const VarsPtr& p3_vars() { return projective_vars(3); }
inline const VarsPtr& t_vars() { return param_vars(2); }

/// x_i -> t_i for i < m; throws if a later variable occurs.
MultiPoly to_params(const MultiPoly& f, std::size_t m);
/// t_i -> x_i, into the given projective ring.
MultiPoly from_params(const MultiPoly& f, const VarsPtr& target);

}  // namespace msurf
