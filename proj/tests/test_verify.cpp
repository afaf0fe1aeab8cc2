#include <stdexcept>

#include "doctest.h"
#include "qmzeta/verify.hpp"
#include "test_util.hpp"

using qmzeta::GridSpec;
using qmzeta::Route;
using qmztest::frac;

TEST_CASE("grid sweep agrees everywhere") {
    GridSpec grid;
    grid.n_min = 2;
    grid.n_max = 7;
    grid.m_min = 0;
    grid.m_max = 3;
    grid.s_min = 1;
    grid.s_max = 2;
    auto cells = qmzeta::verify_grid(grid);
    CHECK_FALSE(cells.empty());
    long star_cells = 0, nonstar_cells = 0;
    for (const auto& cell : cells) {
        CHECK(cell.agree);
        CHECK_FALSE(cell.outcomes.empty());
        (cell.query.star ? star_cells : nonstar_cells) += 1;
        for (const auto& out : cell.outcomes) {
            CHECK(out.evaluated);
            CHECK(out.error.empty());
        }
    }
    CHECK(star_cells == 6 * 4 * 2);
    // non-star cells with m > n - 1 have no valid route and are skipped
    CHECK(nonstar_cells == star_cells - 2 * (2 + 1));
}

TEST_CASE("grid sweep at generic rational q") {
    GridSpec grid;
    grid.n_min = 2;
    grid.n_max = 5;
    grid.m_min = 0;
    grid.m_max = 2;
    grid.s_min = 1;
    grid.s_max = 2;
    grid.q = qmzeta::QSpec::rational(frac(3, 5));
    auto cells = qmzeta::verify_grid(grid);
    CHECK_FALSE(cells.empty());
    for (const auto& cell : cells) {
        CHECK(cell.agree);
        CHECK(cell.outcomes.size() == 2);  // brute and stirling at generic q
    }
}

TEST_CASE("fault injection is caught") {
    GridSpec grid;
    grid.n_min = 3;
    grid.n_max = 5;
    grid.m_min = 1;
    grid.m_max = 2;
    grid.s_min = 1;
    grid.s_max = 1;
    grid.nonstar = false;
    auto cells = qmzeta::verify_grid(grid, Route::GenFun);
    CHECK_FALSE(cells.empty());
    for (const auto& cell : cells) CHECK_FALSE(cell.agree);
}

TEST_CASE("bad ranges are rejected") {
    GridSpec grid;
    grid.n_min = 5;
    grid.n_max = 4;
    CHECK_THROWS_AS(qmzeta::verify_grid(grid), std::invalid_argument);
    GridSpec none;
    none.star = false;
    none.nonstar = false;
    CHECK_THROWS_AS(qmzeta::verify_grid(none), std::invalid_argument);
}
