#pragma once

#include <map>
#include <string>

#include "zetalab/bigcomplex.hpp"

namespace zetalab {

// Two-sided evaluation record for one identity or transformation check.
struct VerificationReport {
    std::string id;
    std::map<std::string, std::string> params;
    BigComplex lhs;
    BigComplex rhs;
    BigReal abs_residual;
    BigReal tolerance;
    bool passed = false;
    long terms_used = 0;

    // For checks whose pass criterion is not |lhs-rhs| < tol (the known
    // false identity), what the measured discrepancy was compared against.
    std::string note;
};

} // namespace zetalab
