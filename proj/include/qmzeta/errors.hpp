#pragma once

#include <stdexcept>
#include <string>

namespace qmzeta {

/// Raised when [k]_q = 0 and a negative power of it is requested.
struct ZeroQNumberError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised when a cyclotomic element expected to be rational has nonzero
/// coefficients above degree 0. Carries the offending coefficient vector.
struct NonRationalError : std::domain_error {
    explicit NonRationalError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when the generating-function denominator fails its valuation check
/// (constant term nonzero, or X^1 coefficient != -n^s).
struct ValuationError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Raised when polynomial degree detection does not stabilize within the
/// configured sample budget.
struct NoStabilizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a computation route is invoked outside its stated validity range.
struct OutOfValidityError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace qmzeta
