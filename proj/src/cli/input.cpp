#include "msurf/cli/input.hpp"

#include "msurf/exactalg/parse.hpp"
#include "msurf/exactalg/rings.hpp"

#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace msurf::cli {

namespace {

// Maps offsets inside a (possibly continued) value back to the file.
struct Segment {
    std::size_t offset;
    int line;
    int column;
};

struct Value {
    std::string text;
    std::vector<Segment> segments;
    int key_line = 0;

    std::pair<int, int> locate(std::size_t pos) const {
        const Segment* seg = &segments.front();
        for (const auto& s : segments)
            if (s.offset <= pos) seg = &s;
        return {seg->line, seg->column + static_cast<int>(pos - seg->offset)};
    }
    [[noreturn]] void fail(std::size_t pos, const std::string& msg) const {
        const auto [l, c] = locate(std::min(pos, text.empty() ? 0 : text.size()));
        throw InputError(l, c, msg);
    }
};

std::size_t first_non_space(const std::string& s, std::size_t from = 0) {
    while (from < s.size() && (s[from] == ' ' || s[from] == '\t')) ++from;
    return from;
}

std::string rtrim(std::string s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
    return s;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char ch : s)
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
    return true;
}

MultiPoly parse_in(const Value& v, std::size_t start, const std::string& text, const VarsPtr& vars,
                   const Field& field) {
    try {
        return poly_parse(text, vars, field);
    } catch (const ParseError& e) {
        v.fail(start + e.position(), e.message());
    } catch (const std::invalid_argument& e) {
        v.fail(start, e.what());
    }
}

}  // namespace

InputSpec parse_input(const std::string& text) {
    static const std::set<std::string> known{"name", "field", "vars", "line", "gamma_codim", "F"};
    std::map<std::string, Value> values;
    std::string current;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = rtrim(line);
        const std::size_t start = first_non_space(line);
        if (start == line.size()) continue;
        if (start > 0) {
            if (current.empty()) throw InputError(lineno, static_cast<int>(start) + 1, "continuation without a key");
            Value& v = values[current];
            v.text += ' ';
            v.segments.push_back({v.text.size(), lineno, static_cast<int>(start) + 1});
            v.text += line.substr(start);
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw InputError(lineno, 1, "expected 'key = value'");
        const std::string key = rtrim(line.substr(0, eq));
        if (!known.count(key)) throw InputError(lineno, 1, "unknown key '" + key + "'");
        if (values.count(key)) throw InputError(lineno, 1, "duplicate key '" + key + "'");
        const std::size_t vstart = first_non_space(line, eq + 1);
        Value v;
        v.key_line = lineno;
        v.segments.push_back({0, lineno, static_cast<int>(vstart) + 1});
        v.text = line.substr(std::min(vstart, line.size()));
        values[key] = std::move(v);
        current = key;
    }

    InputSpec spec;
    if (auto it = values.find("name"); it != values.end()) spec.name = it->second.text;
    if (auto it = values.find("field"); it != values.end()) {
        const Value& v = it->second;
        std::string compact;
        for (char ch : v.text)
            if (ch != ' ' && ch != '\t') compact += ch;
        if (compact == "Q") {
            spec.field = Field::rationals();
        } else if (compact.rfind("Q(sqrt,", 0) == 0 && compact.back() == ')') {
            const std::string num = compact.substr(7, compact.size() - 8);
            try {
                std::size_t used = 0;
                const long disc = std::stol(num, &used);
                if (used != num.size()) v.fail(0, "bad discriminant '" + num + "'");
                spec.field = Field::quadratic(disc);
            } catch (const InputError&) {
                throw;
            } catch (const std::exception&) {
                v.fail(0, "bad discriminant '" + num + "'");
            }
        } else {
            v.fail(0, "field must be 'Q' or 'Q(sqrt, D)'");
        }
    }
    auto need = [&](const char* key) -> const Value& {
        auto it = values.find(key);
        if (it == values.end()) throw InputError(lineno + 1, 1, std::string("missing key '") + key + "'");
        return it->second;
    };
    const Value& vv = need("vars");
    {
        std::istringstream vs(vv.text);
        std::string name;
        while (vs >> name) {
            if (!is_identifier(name) || name == "w") vv.fail(vv.text.find(name), "bad variable name '" + name + "'");
            if (std::find(spec.vars.begin(), spec.vars.end(), name) != spec.vars.end())
                vv.fail(vv.text.find(name), "repeated variable '" + name + "'");
            spec.vars.push_back(name);
        }
    }
    if (spec.vars.size() < 3) vv.fail(0, "need at least three variables");
    const VarsPtr user = MultiPoly::make_vars(spec.vars);
    const VarsPtr target = projective_vars(spec.vars.size() - 1);
    std::vector<std::size_t> ident(spec.vars.size());
    std::iota(ident.begin(), ident.end(), std::size_t{0});

    const Value& fv = need("F");
    spec.F_text = fv.text;
    const MultiPoly F = parse_in(fv, 0, fv.text, user, spec.field);
    if (F.is_zero()) fv.fail(0, "F is zero");
    if (!F.is_homogeneous()) fv.fail(0, "F is not homogeneous");
    spec.F = F.remap(target, ident);

    const bool has_line = values.count("line") > 0, has_codim = values.count("gamma_codim") > 0;
    if (has_line == has_codim) {
        const int at = has_line ? values["line"].key_line : lineno + 1;
        throw InputError(at, 1, "exactly one of 'line' and 'gamma_codim' is required");
    }
    if (has_line) {
        const Value& lv = values["line"];
        spec.line_text = lv.text;
        if (spec.vars.size() != 4) lv.fail(0, "a line needs a surface in four variables");
        const auto comma = lv.text.find(',');
        if (comma == std::string::npos || lv.text.find(',', comma + 1) != std::string::npos)
            lv.fail(0, "line needs exactly two linear forms separated by ','");
        std::array<MultiPoly, 2> forms;
        const std::string parts[2] = {lv.text.substr(0, comma), lv.text.substr(comma + 1)};
        const std::size_t starts[2] = {0, comma + 1};
        for (int i = 0; i < 2; ++i) {
            const MultiPoly f = parse_in(lv, starts[i], parts[i], user, spec.field);
            if (f.is_zero() || !f.is_homogeneous() || f.total_degree() != 1)
                lv.fail(starts[i] + first_non_space(parts[i]), "not a linear form");
            forms[i] = f.remap(target, ident);
        }
        spec.line = forms;
    } else {
        const Value& cv = values["gamma_codim"];
        try {
            std::size_t used = 0;
            const int m = std::stoi(cv.text, &used);
            if (used != cv.text.size()) throw std::invalid_argument("trailing");
            if (m < 1 || m > static_cast<int>(spec.vars.size()) - 1) cv.fail(0, "gamma_codim must be in 1..n+1");
            spec.gamma_codim = m;
        } catch (const InputError&) {
            throw;
        } catch (const std::exception&) {
            cv.fail(0, "gamma_codim must be an integer");
        }
    }
    return spec;
}

InputSpec read_input(const std::string& path, std::string* raw) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError(0, 0, "cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    if (raw) *raw = ss.str();
    return parse_input(ss.str());
}

std::string format_input(const InputSpec& spec) {
    std::ostringstream out;
    if (!spec.name.empty()) out << "name = " << spec.name << '\n';
    out << "field = " << spec.field.to_string() << '\n';
    out << "vars =";
    for (const auto& v : spec.vars) out << ' ' << v;
    out << '\n';
    const VarsPtr user = MultiPoly::make_vars(spec.vars);
    std::vector<std::size_t> ident(spec.vars.size());
    std::iota(ident.begin(), ident.end(), std::size_t{0});
    if (spec.line)
        out << "line = " << (*spec.line)[0].remap(user, ident).to_string() << ", "
            << (*spec.line)[1].remap(user, ident).to_string() << '\n';
    if (spec.gamma_codim) out << "gamma_codim = " << *spec.gamma_codim << '\n';
    out << "F = " << spec.F.remap(user, ident).to_string() << '\n';
    return out.str();
}

}  // namespace msurf::cli
