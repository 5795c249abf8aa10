#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

// Argument outside a function's mathematical domain (pole, branch point,
// lower half-plane, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A series could not be truncated within the certified error budget
// (max_terms exhausted or tail bound not attainable).
struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// A summand's denominator came too close to zero.
struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// Exact-arithmetic request beyond the configured size cap.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Structural validation failure; the message names the violated invariant.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Parameter combination outside the supported cases of an identity.
struct UnsupportedCase : std::runtime_error {
    explicit UnsupportedCase(const std::string& what) : std::runtime_error(what) {}
};

// Construction that must yield a polynomial left residual negative powers.
struct NotAPolynomial : std::runtime_error {
    explicit NotAPolynomial(const std::string& what) : std::runtime_error(what) {}
};

// No root with the required properties exists.
struct NoSuchRoot : std::runtime_error {
    explicit NoSuchRoot(const std::string& what) : std::runtime_error(what) {}
};

// A usable root exists but the evaluation there would lose all accuracy.
struct IllConditioned : std::runtime_error {
    explicit IllConditioned(const std::string& what) : std::runtime_error(what) {}
};

// Iterative solver did not converge within its iteration cap.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace zetalab
