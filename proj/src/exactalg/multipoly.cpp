#include "msurf/exactalg/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace msurf {

bool GrlexDescending::operator()(const Exponent& a, const Exponent& b) const {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

unsigned total_degree(const Exponent& e) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    return s;
}

namespace {

const VarsPtr& empty_vars() {
    static const VarsPtr v = std::make_shared<const VarList>();
    return v;
}

}  // namespace

MultiPoly::MultiPoly() : vars_(empty_vars()) {}
MultiPoly::MultiPoly(VarsPtr vars) : vars_(std::move(vars)) {
    if (!vars_) vars_ = empty_vars();
}
MultiPoly::MultiPoly(VarList vars) : vars_(make_vars(std::move(vars))) {}

VarsPtr MultiPoly::make_vars(VarList vars) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw std::invalid_argument("duplicate variable name " + vars[i]);
    return std::make_shared<const VarList>(std::move(vars));
}

MultiPoly MultiPoly::constant(const VarsPtr& vars, const FieldElement& c) {
    MultiPoly p(vars);
    p.add_term(Exponent(p.nvars(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const VarsPtr& vars, std::size_t index) {
    MultiPoly p(vars);
    if (index >= p.nvars()) throw std::out_of_range("variable index out of range");
    Exponent e(p.nvars(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::monomial(const VarsPtr& vars, Exponent e, const FieldElement& c) {
    MultiPoly p(vars);
    if (e.size() != p.nvars()) throw std::invalid_argument("exponent length does not match variable count");
    p.add_term(e, c);
    return p;
}

std::optional<std::size_t> MultiPoly::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_->size(); ++i)
        if ((*vars_)[i] == name) return i;
    return std::nullopt;
}

bool MultiPoly::same_ring(const MultiPoly& other) const {
    return vars_ == other.vars_ || *vars_ == *other.vars_;
}

void MultiPoly::require_same_ring(const MultiPoly& other) const {
    if (!same_ring(other)) throw std::invalid_argument("polynomials live in different variable sets");
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(msurf::total_degree(terms_.begin()->first));
}

int MultiPoly::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

int MultiPoly::min_degree_in(std::size_t var) const {
    if (terms_.empty()) return -1;
    unsigned d = terms_.begin()->first[var];
    for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
    return static_cast<int>(d);
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = msurf::total_degree(terms_.begin()->first);
    return msurf::total_degree(terms_.rbegin()->first) == d;
}

bool MultiPoly::involves_only(std::span<const std::size_t> allowed) const {
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0 && std::find(allowed.begin(), allowed.end(), i) == allowed.end()) return false;
    return true;
}

const Exponent& MultiPoly::leading_exponent() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.begin()->first;
}

const FieldElement& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.begin()->second;
}

FieldElement MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElement{} : it->second;
}

FieldElement MultiPoly::constant_term() const { return coefficient(Exponent(nvars(), 0)); }

void MultiPoly::add_term(const Exponent& e, const FieldElement& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_ring(b);
    MultiPoly r(a.vars_);
    if (a.is_zero() || b.is_zero()) return r;
    const std::size_t n = a.nvars();
    Exponent e(n);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            auto [it, inserted] = r.terms_.try_emplace(e, ca);
            if (inserted) {
                it->second *= cb;
            } else {
                it->second += ca * cb;
            }
        }
    }
    std::erase_if(r.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const FieldElement& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = constant(vars_, 1);
    MultiPoly base = *this;
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent f = e;
        --f[var];
        r.add_term(f, c * FieldElement(static_cast<long>(e[var])));
    }
    return r;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    MultiPoly r = *this;
    if (!leading_coefficient().is_one()) r *= leading_coefficient().inverse();
    return r;
}

MultiPoly MultiPoly::shifted(const Exponent& shift) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
        r.terms_.emplace_hint(r.terms_.end(), std::move(f), c);
    }
    return r;
}

FieldElement MultiPoly::evaluate(std::span<const FieldElement> point) const {
    if (point.size() != nvars()) throw std::invalid_argument("evaluation point has wrong length");
    // cache powers per variable
    std::vector<std::vector<FieldElement>> powers(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
        const int d = degree_in(i);
        powers[i].push_back(FieldElement(1));
        for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * point[i]);
    }
    FieldElement sum;
    for (const auto& [e, c] : terms_) {
        FieldElement t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= powers[i][e[i]];
        sum += t;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
    if (images.size() != nvars()) throw std::invalid_argument("substitution needs one image per variable");
    VarsPtr target = images.empty() ? vars_ : images[0].vars_ptr();
    for (const auto& im : images)
        if (!(im.vars_ptr() == target || im.vars() == *target))
            throw std::invalid_argument("substitution images live in different rings");
    std::vector<std::vector<MultiPoly>> powers(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
        const int d = degree_in(i);
        powers[i].push_back(constant(target, 1));
        for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * images[i]);
    }
    MultiPoly sum(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t = t * powers[i][e[i]];
        sum += t;
    }
    return sum;
}

MultiPoly MultiPoly::partial_evaluate(std::size_t var, const FieldElement& value) const {
    MultiPoly r(vars_);
    std::vector<FieldElement> powers{FieldElement(1)};
    for (const auto& [e, c] : terms_) {
        while (powers.size() <= e[var]) powers.push_back(powers.back() * value);
        Exponent f = e;
        f[var] = 0;
        r.add_term(f, c * powers[e[var]]);
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(degree_in(var) + 1, 0)), MultiPoly(vars_));
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        f[var] = 0;
        out[e[var]].terms_.emplace(std::move(f), c);
    }
    return out;
}

MultiPoly MultiPoly::remap(const VarsPtr& target, std::span<const std::size_t> index_map) const {
    if (index_map.size() != nvars()) throw std::invalid_argument("index map has wrong length");
    MultiPoly r(target);
    for (const auto& [e, c] : terms_) {
        Exponent f(r.nvars(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (index_map[i] >= f.size()) throw std::out_of_range("index map points outside the target ring");
            f[index_map[i]] += e[i];
        }
        r.add_term(f, c);
    }
    return r;
}

MultiPoly MultiPoly::rename_into(const VarsPtr& target) const {
    std::vector<std::size_t> map(nvars());
    MultiPoly probe(target);
    for (std::size_t i = 0; i < nvars(); ++i) {
        auto j = probe.var_index((*vars_)[i]);
        if (!j) {
            if (degree_in(i) > 0) throw std::invalid_argument("variable " + (*vars_)[i] + " missing in target ring");
            map[i] = 0;
        } else {
            map[i] = *j;
        }
    }
    if (probe.nvars() == 0 && !is_constant()) throw std::invalid_argument("empty target ring");
    if (probe.nvars() == 0) {
        MultiPoly r(target);
        r.add_term(Exponent{}, constant_term());
        return r;
    }
    return remap(target, map);
}

long MultiPoly::field_disc() const {
    for (const auto& [e, c] : terms_)
        if (c.disc() != 0) return c.disc();
    return 0;
}

namespace {

std::string rational_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string monomial_string(const Exponent& e, const VarList& vars) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

}  // namespace

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const std::string mono = monomial_string(e, *vars_);
        bool negative = false;
        std::string coeff;
        if (c.is_rational() || c.rational_part() == 0) {
            // single-part coefficient: pull the sign out
            const bool wpart = !c.is_rational();
            const Rational& r = wpart ? c.w_part() : c.rational_part();
            negative = r < 0;
            const Rational a = abs(r);
            if (wpart) {
                coeff = a == 1 ? "w" : rational_string(a) + "*w";
            } else if (a != 1 || mono.empty()) {
                coeff = rational_string(a);
            }
        } else {
            coeff = "(" + c.to_string() + ")";
        }
        std::string term = coeff;
        if (!mono.empty()) term += (term.empty() ? "" : "*") + mono;
        if (first) {
            out = (negative ? "-" : "") + term;
        } else {
            out += (negative ? " - " : " + ") + term;
        }
        first = false;
    }
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!a.same_ring(b)) return false;
    return a.terms_ == b.terms_;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

}  // namespace msurf
