#pragma once

#include <stdexcept>
#include <string>

namespace msurf {

/// Input that violates a structural invariant. invariant() is a short
/// machine-readable tag such as "cone" or "degree".
class Rejection : public std::invalid_argument {
public:
    Rejection(std::string invariant, const std::string& detail)
        : std::invalid_argument(invariant + ": " + detail), invariant_(std::move(invariant)) {}
    const std::string& invariant() const { return invariant_; }

private:
    std::string invariant_;
};

}  // namespace msurf
