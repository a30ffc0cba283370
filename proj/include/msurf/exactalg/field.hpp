#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace msurf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficient field: Q, or Q(w) with w^2 = disc for a square-free disc.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field{}; }
    /// Throws std::invalid_argument unless disc is square-free and not 0 or 1.
    static Field quadratic(long disc);

    long disc() const { return disc_; }
    bool is_rational() const { return disc_ == 0; }

    /// "Q" or "Q(sqrt, D)", the spelling used in input files.
    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(long disc) : disc_(disc) {}
    long disc_ = 0;
};

/// Element a + b*w of Q(w), w^2 = disc. A rational element (b == 0) mixes
/// freely with elements of any quadratic field; mixing two different
/// quadratic fields throws.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    FieldElement(const Integer& v) : a_(v) {}  // NOLINT
    FieldElement(const Rational& v) : a_(v) {}  // NOLINT
    FieldElement(Rational a, Rational b, long disc);

    static FieldElement generator(long disc) { return FieldElement(0, 1, disc); }
    static FieldElement ratio(long num, long den);

    const Rational& rational_part() const { return a_; }
    const Rational& w_part() const { return b_; }
    /// 0 when the element is rational.
    long disc() const { return b_ == 0 ? 0 : disc_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
    friend FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
    friend FieldElement operator*(FieldElement x, const FieldElement& y) { return x *= y; }
    friend FieldElement operator/(FieldElement x, const FieldElement& y) { return x /= y; }

    /// Throws std::domain_error on zero.
    FieldElement inverse() const;
    FieldElement conjugate() const;
    /// a^2 - disc*b^2.
    Rational norm() const;
    FieldElement pow(unsigned e) const;

    friend bool operator==(const FieldElement& x, const FieldElement& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.disc_ == y.disc_);
    }

    /// "3", "-1/2", "w", "1/2 + 3/4*w", "-w".
    std::string to_string() const;

private:
    static long join_disc(const FieldElement& x, const FieldElement& y);

    Rational a_;
    Rational b_;
    long disc_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// True when n is not divisible by the square of any prime.
bool is_squarefree_integer(long n);

}  // namespace msurf
