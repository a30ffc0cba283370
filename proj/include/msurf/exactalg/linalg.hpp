#pragma once

#include "msurf/exactalg/multipoly.hpp"

#include <optional>
#include <vector>

namespace msurf {

FieldMatrix identity_matrix(std::size_t n);
FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b);
std::vector<FieldElement> mat_vec(const FieldMatrix& a, const std::vector<FieldElement>& v);
FieldElement determinant(FieldMatrix m);
std::size_t rank(FieldMatrix m);
/// Empty optional when singular.
std::optional<FieldMatrix> inverse(const FieldMatrix& m);
/// Basis of {x : m x = 0}.
std::vector<std::vector<FieldElement>> nullspace(FieldMatrix m, std::size_t ncols);

/// Scales a projective vector so its first nonzero coordinate is 1.
std::vector<FieldElement> projective_normalize(std::vector<FieldElement> v);
/// a and b represent the same projective point (both nonzero, proportional).
bool projectively_equal(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b);

}  // namespace msurf
