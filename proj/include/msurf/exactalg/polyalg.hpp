#pragma once

#include "msurf/exactalg/multipoly.hpp"

#include <optional>
#include <vector>

namespace msurf {

struct DivisionResult {
    MultiPoly quotient;
    MultiPoly remainder;
};

/// Multivariate division by a single divisor in grlex order. The remainder
/// is zero exactly when divisor | p.
DivisionResult divide(const MultiPoly& p, const MultiPoly& divisor);
bool divides(const MultiPoly& divisor, const MultiPoly& p);
/// Quotient of an exact division; throws std::domain_error otherwise.
MultiPoly exact_quotient(const MultiPoly& p, const MultiPoly& divisor);

/// Monic gcd (grlex leading coefficient 1); gcd(0,0) = 0.
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_gcd(const std::vector<MultiPoly>& ps);

struct SquarefreeFactor {
    MultiPoly factor;
    unsigned multiplicity;
};

struct SquarefreeDecomposition {
    FieldElement unit;
    /// Sorted by multiplicity, factors monic and pairwise coprime.
    std::vector<SquarefreeFactor> factors;

    MultiPoly reconstruct(const VarsPtr& vars) const;
    /// Product of the factors with exactly this multiplicity (1 if none).
    MultiPoly part(unsigned multiplicity, const VarsPtr& vars) const;
    unsigned max_multiplicity() const;
};

/// Yun decomposition of a homogeneous binary form in variables (u, v).
/// Throws std::invalid_argument on zero or non-binary input.
SquarefreeDecomposition squarefree_decomposition(const MultiPoly& f, std::size_t u, std::size_t v);
/// Uses the first two variables that occur (or variables 0 and 1).
SquarefreeDecomposition squarefree_decomposition(const MultiPoly& f);
/// Monic product of the distinct factors.
MultiPoly squarefree_part(const MultiPoly& f, std::size_t u, std::size_t v);
bool is_squarefree(const MultiPoly& f, std::size_t u, std::size_t v);

/// Sylvester resultant with respect to var; both inputs need positive degree in var.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var);
/// Classical discriminant: (-1)^(n(n-1)/2) Res_var(f, df/dvar) / lc(f).
MultiPoly discriminant(const MultiPoly& f, std::size_t var);
/// Sylvester resultant of two binary forms in (u, v) of formal degrees m, n:
/// the coefficient of u^(m-i) v^i is read as entry i.
MultiPoly binary_resultant(const MultiPoly& f, unsigned m, const MultiPoly& g, unsigned n, std::size_t u,
                           std::size_t v);
/// Discriminant of a binary form of formal degree n in (u, v), from
/// Res(df/du, df/dv). Agrees with the classical discriminant of f(u, 1)
/// when that has degree n.
MultiPoly binary_discriminant(const MultiPoly& f, unsigned n, std::size_t u, std::size_t v);

/// Fraction-free (Bareiss) determinant of a square polynomial matrix.
MultiPoly determinant(const PolyMatrix& m);
/// All k x k minors, rows and columns chosen in lexicographic order.
std::vector<MultiPoly> minors(const PolyMatrix& m, std::size_t k);
/// Minor with column col removed, for an r x (r+1) matrix.
MultiPoly maximal_minor_without_column(const PolyMatrix& m, std::size_t col);

/// gcd(modulus, all (r+1)-minors of M), monic. When r+1 exceeds the matrix
/// size there are no such minors and the modulus itself is returned.
MultiPoly minor_gcd_locus(const PolyMatrix& m, const MultiPoly& modulus, std::size_t r);

/// f(Mx): variable i becomes sum_j M[i][j] x_j. Throws on singular M.
MultiPoly linear_substitution(const MultiPoly& f, const FieldMatrix& m);

/// Degree of a binary form as a divisor; -1 for zero.
inline int form_degree(const MultiPoly& f) { return f.total_degree(); }

}  // namespace msurf
