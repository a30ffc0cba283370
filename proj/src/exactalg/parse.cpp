#include "msurf/exactalg/parse.hpp"

#include <cctype>

namespace msurf {

namespace {

class Parser {
public:
    Parser(std::string_view text, const VarsPtr& vars, const Field& field)
        : s_(text), vars_(vars), field_(field), probe_(vars) {}

    MultiPoly run() {
        skip();
        if (pos_ == s_.size()) throw ParseError(pos_, "empty expression");
        MultiPoly p = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        MultiPoly p = term();
        for (;;) {
            if (eat('+')) {
                p += term();
            } else if (eat('-')) {
                p -= term();
            } else {
                return p;
            }
        }
    }

    MultiPoly term() {
        MultiPoly p = unary();
        while (eat('*')) p *= unary();
        skip();
        if (pos_ < s_.size()) {
            const char c = s_[pos_];
            if (c == '/') throw ParseError(pos_, "division is only allowed inside a rational literal a/b");
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_')
                throw ParseError(pos_, "missing '*' between factors");
        }
        return p;
    }

    MultiPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    MultiPoly power() {
        MultiPoly base = atom();
        if (eat('^')) {
            skip();
            const std::size_t start = pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError(pos_, "exponent must be a non-negative integer");
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string digits(s_.substr(start, pos_ - start));
            if (digits.size() > 6) throw ParseError(start, "exponent too large");
            return base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    Integer digits() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    MultiPoly atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            if (!eat(')')) throw ParseError(pos_, "expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = digits();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                const std::size_t slash = pos_;
                ++pos_;
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    throw ParseError(slash, "rational literal needs digits after '/'");
                Integer den = digits();
                if (den == 0) throw ParseError(slash, "zero denominator");
                Rational r(num, den);
                r.canonicalize();
                return MultiPoly::constant(vars_, r);
            }
            return MultiPoly::constant(vars_, num);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            const std::string_view name = s_.substr(start, pos_ - start);
            if (auto i = probe_.var_index(name)) return MultiPoly::variable(vars_, *i);
            if (name == "w") {
                if (field_.is_rational()) throw ParseError(start, "generator w used but the field is Q");
                return MultiPoly::constant(vars_, FieldElement::generator(field_.disc()));
            }
            throw ParseError(start, "unknown variable '" + std::string(name) + "'");
        }
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    const VarsPtr& vars_;
    const Field& field_;
    MultiPoly probe_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly poly_parse(std::string_view text, const VarsPtr& vars, const Field& field) {
    return Parser(text, vars, field).run();
}

MultiPoly poly_parse(std::string_view text, const MultiPoly& ring_of, const Field& field) {
    return Parser(text, ring_of.vars_ptr(), field).run();
}

}  // namespace msurf
