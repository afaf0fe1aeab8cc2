#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmzeta/zeta.hpp"

namespace qmzeta {

struct RouteOutcome {
    Route route = Route::Brute;
    bool evaluated = false;  // false: error holds the failure reason
    Rational value;
    std::string error;
};

struct CellResult {
    ZetaQuery query;
    std::vector<RouteOutcome> outcomes;  // one per route valid for the query
    bool agree = false;
};

struct GridSpec {
    long n_min = 2, n_max = 2;
    long m_min = 0, m_max = 0;
    long s_min = 1, s_max = 1;
    bool star = true;
    bool nonstar = true;
    QSpec q;
};

/// Runs every valid route on every cell of the grid and compares values
/// exactly. Cells with no valid route (non-star with m > n-1) are skipped.
/// A route that throws marks its cell as disagreeing. inject_fault, when
/// set, adds 1 to that route's values as a negative control of the harness
/// itself.
std::vector<CellResult> verify_grid(const GridSpec& grid,
                                    std::optional<Route> inject_fault = {});

}  // namespace qmzeta
