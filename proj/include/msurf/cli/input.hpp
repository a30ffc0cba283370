#pragma once

#include "msurf/exactalg/multipoly.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace msurf::cli {

/// Malformed description file. Line and column are 1-based.
class InputError : public std::runtime_error {
public:
    InputError(int line, int column, const std::string& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column), message_(message) {}
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int line_, column_;
    std::string message_;
};

/// A parsed .surf / .hyp file. Polynomials are moved into projective_vars
/// positionally, so the user's variable names only matter for parsing.
struct InputSpec {
    std::string name;
    Field field = Field::rationals();
    std::vector<std::string> vars;
    std::optional<std::array<MultiPoly, 2>> line;
    std::optional<int> gamma_codim;
    MultiPoly F;
    std::string F_text;
    std::string line_text;
};

/// Format: one `key = value` per line, '#' starts a comment, indented lines
/// continue the previous value. Keys: name, field, vars, line, gamma_codim, F.
InputSpec parse_input(const std::string& text);
/// Reads a file; I/O failures become InputError at 0:0.
InputSpec read_input(const std::string& path, std::string* raw = nullptr);

/// Writes an input file back out from its parsed form.
std::string format_input(const InputSpec& spec);

}  // namespace msurf::cli
