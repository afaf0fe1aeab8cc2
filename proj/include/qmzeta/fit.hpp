#pragma once

#include <functional>

#include "qmzeta/unipoly.hpp"
#include "qmzeta/zeta.hpp"

namespace qmzeta {

using Sampler = std::function<Rational(long)>;

struct FitResult {
    UniPoly poly;  // exact polynomial in the variable n
    long n_start = 0;
    long samples_used = 0;
};

/// Reconstructs the exact polynomial behind sample() by Newton divided
/// differences at the consecutive integer nodes n_start, n_start+1, ...
/// The degree is detected by stabilization: sampling stops once two
/// consecutive top-level divided differences vanish. Every sampled node is
/// re-checked against the fitted polynomial. Throws NoStabilizationError if
/// the budget max_samples is exhausted first.
FitResult fit_npoly(const Sampler& sample, long n_start, long max_samples = 64);

/// Smallest n at which the route can evaluate (m, s, star); throws
/// OutOfValidityError if it never can (wrong s, wrong m shape).
long route_min_n(Route route, long m, long s, bool star);

/// Fits n -> value(n; m, s, star) at the primitive root of unity along the
/// given route. n_start = 0 picks the smallest admissible start for the
/// route.
FitResult fit_zeta_npoly(long m, long s, bool star, Route route, long n_start = 0,
                         long max_samples = 64);

}  // namespace qmzeta
