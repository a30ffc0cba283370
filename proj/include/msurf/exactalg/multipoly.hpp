#pragma once

#include "msurf/exactalg/field.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace msurf {

using Exponent = std::vector<unsigned>;
using VarList = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const VarList>;

/// Graded lexicographic order, largest first: total degree, then the
/// exponent of the first variable, then the second, and so on.
struct GrlexDescending {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

unsigned total_degree(const Exponent& e);

/// Sparse multivariate polynomial over Q or Q(w). The variable list is
/// shared between polynomials of the same ring; binary operations require
/// equal variable lists and throw std::invalid_argument otherwise.
///
/// No zero coefficient is ever stored. Terms are kept in grlex order so
/// begin() is the leading term.
class MultiPoly {
public:
    using TermMap = std::map<Exponent, FieldElement, GrlexDescending>;

    MultiPoly();
    explicit MultiPoly(VarsPtr vars);
    explicit MultiPoly(VarList vars);

    static VarsPtr make_vars(VarList vars);
    static MultiPoly constant(const VarsPtr& vars, const FieldElement& c);
    static MultiPoly variable(const VarsPtr& vars, std::size_t index);
    static MultiPoly monomial(const VarsPtr& vars, Exponent e, const FieldElement& c = 1);

    const VarList& vars() const { return *vars_; }
    const VarsPtr& vars_ptr() const { return vars_; }
    std::size_t nvars() const { return vars_->size(); }
    std::optional<std::size_t> var_index(std::string_view name) const;
    bool same_ring(const MultiPoly& other) const;

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    /// -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(std::size_t var) const;
    /// Smallest exponent of var over all terms; -1 for zero.
    int min_degree_in(std::size_t var) const;
    /// Zero polynomial counts as homogeneous.
    bool is_homogeneous() const;
    /// True when only the listed variables occur.
    bool involves_only(std::span<const std::size_t> allowed) const;

    const Exponent& leading_exponent() const;
    const FieldElement& leading_coefficient() const;
    FieldElement coefficient(const Exponent& e) const;
    FieldElement constant_term() const;

    /// Adds c*x^e in place.
    void add_term(const Exponent& e, const FieldElement& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const FieldElement& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const FieldElement& c) { return a *= c; }
    friend MultiPoly operator*(const FieldElement& c, MultiPoly a) { return a *= c; }

    MultiPoly pow(unsigned e) const;
    MultiPoly derivative(std::size_t var) const;
    /// Divides by the leading coefficient; zero stays zero.
    MultiPoly monic() const;
    /// Multiplies by x^shift.
    MultiPoly shifted(const Exponent& shift) const;

    FieldElement evaluate(std::span<const FieldElement> point) const;
    /// Replaces variable i by images[i]; all images share one target ring.
    MultiPoly substitute(std::span<const MultiPoly> images) const;
    /// Sets one variable to a value, keeping the ring.
    MultiPoly partial_evaluate(std::size_t var, const FieldElement& value) const;
    /// Coefficients with respect to var, index = power; entries live in the
    /// same ring with var absent.
    std::vector<MultiPoly> coefficients_in(std::size_t var) const;
    /// Moves the polynomial to another ring; var i goes to target variable
    /// index_map[i].
    MultiPoly remap(const VarsPtr& target, std::span<const std::size_t> index_map) const;
    /// Moves the polynomial to a ring containing all its variable names.
    MultiPoly rename_into(const VarsPtr& target) const;

    /// Discriminant of the quadratic extension used by the coefficients, 0 for Q.
    long field_disc() const;

    std::string to_string() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

private:
    void require_same_ring(const MultiPoly& other) const;

    VarsPtr vars_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Polynomial matrix, row-major.
using PolyMatrix = std::vector<std::vector<MultiPoly>>;
using FieldMatrix = std::vector<std::vector<FieldElement>>;

}  // namespace msurf
