#pragma once

#include "msurf/exactalg/parse.hpp"

#include <string>

namespace testing {

inline const msurf::VarsPtr& tvars() {
    static const msurf::VarsPtr v = msurf::MultiPoly::make_vars({"t0", "t1"});
    return v;
}
inline const msurf::VarsPtr& xvars() {
    static const msurf::VarsPtr v = msurf::MultiPoly::make_vars({"x0", "x1", "x2", "x3"});
    return v;
}

inline msurf::MultiPoly T(const std::string& s, long disc = 0) {
    return msurf::poly_parse(s, tvars(), disc == 0 ? msurf::Field::rationals() : msurf::Field::quadratic(disc));
}
inline msurf::MultiPoly X(const std::string& s, long disc = 0) {
    return msurf::poly_parse(s, xvars(), disc == 0 ? msurf::Field::rationals() : msurf::Field::quadratic(disc));
}

}  // namespace testing
