#include "msurf/exactalg/field.hpp"

#include <cstdlib>
#include <ostream>

namespace msurf {

bool is_squarefree_integer(long n) {
    unsigned long m = static_cast<unsigned long>(n < 0 ? -n : n);
    if (m == 0) return false;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % (p * p) == 0) return false;
        while (m % p == 0) m /= p;
    }
    return true;
}

Field Field::quadratic(long disc) {
    if (disc == 0 || disc == 1 || !is_squarefree_integer(disc))
        throw std::invalid_argument("quadratic field needs a square-free discriminant other than 0, 1; got " +
                                    std::to_string(disc));
    return Field(disc);
}

std::string Field::to_string() const {
    if (is_rational()) return "Q";
    return "Q(sqrt, " + std::to_string(disc_) + ")";
}

FieldElement::FieldElement(Rational a, Rational b, long disc)
    : a_(std::move(a)), b_(std::move(b)), disc_(disc) {
    a_.canonicalize();
    b_.canonicalize();
    if (b_ != 0 && (disc == 0 || disc == 1 || !is_squarefree_integer(disc)))
        throw std::invalid_argument("w-coordinate given without a valid quadratic field");
}

FieldElement FieldElement::ratio(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return FieldElement(r);
}

long FieldElement::join_disc(const FieldElement& x, const FieldElement& y) {
    const long dx = x.disc();
    const long dy = y.disc();
    if (dx == 0) return dy != 0 ? dy : (x.disc_ != 0 ? x.disc_ : y.disc_);
    if (dy == 0 || dx == dy) return dx;
    throw std::domain_error("cannot combine elements of Q(sqrt " + std::to_string(dx) + ") and Q(sqrt " +
                            std::to_string(dy) + ")");
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    disc_ = join_disc(*this, o);
    a_ += o.a_;
    if (o.b_ != 0) b_ += o.b_;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    disc_ = join_disc(*this, o);
    a_ -= o.a_;
    if (o.b_ != 0) b_ -= o.b_;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    const long d = join_disc(*this, o);
    if (b_ == 0 && o.b_ == 0) {
        a_ *= o.a_;
    } else {
        Rational na = a_ * o.a_ + Rational(d) * b_ * o.b_;
        Rational nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
    }
    disc_ = d;
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    if (o.b_ == 0) {
        if (o.a_ == 0) throw std::domain_error("division by zero field element");
        disc_ = join_disc(*this, o);
        a_ /= o.a_;
        if (b_ != 0) b_ /= o.a_;
        return *this;
    }
    return *this *= o.inverse();
}

Rational FieldElement::norm() const {
    if (b_ == 0) return a_ * a_;
    return a_ * a_ - Rational(disc_) * b_ * b_;
}

FieldElement FieldElement::conjugate() const {
    FieldElement r = *this;
    r.b_ = -r.b_;
    return r;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero field element");
    if (b_ == 0) return FieldElement(Rational(1) / a_);
    const Rational n = norm();
    return FieldElement(a_ / n, -b_ / n, disc_);
}

FieldElement FieldElement::pow(unsigned e) const {
    FieldElement result(1);
    FieldElement base = *this;
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

namespace {

std::string rational_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace

std::string FieldElement::to_string() const {
    if (b_ == 0) return rational_string(a_);
    std::string wpart;
    const Rational absb = abs(b_);
    wpart = absb == 1 ? "w" : rational_string(absb) + "*w";
    if (a_ == 0) return (b_ < 0 ? "-" : "") + wpart;
    return rational_string(a_) + (b_ < 0 ? " - " : " + ") + wpart;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

}  // namespace msurf
