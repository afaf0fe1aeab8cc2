#include "qmzeta/verify.hpp"

#include <stdexcept>

namespace qmzeta {

std::vector<CellResult> verify_grid(const GridSpec& grid, std::optional<Route> inject_fault) {
    if (grid.n_min < 2 || grid.n_min > grid.n_max)
        throw std::invalid_argument("verify_grid: need 2 <= n_min <= n_max");
    if (grid.m_min < 0 || grid.m_min > grid.m_max)
        throw std::invalid_argument("verify_grid: need 0 <= m_min <= m_max");
    if (grid.s_min < 1 || grid.s_min > grid.s_max)
        throw std::invalid_argument("verify_grid: need 1 <= s_min <= s_max");
    if (!grid.star && !grid.nonstar)
        throw std::invalid_argument("verify_grid: at least one of star/nonstar required");
    std::vector<CellResult> cells;
    for (long n = grid.n_min; n <= grid.n_max; ++n)
        for (long m = grid.m_min; m <= grid.m_max; ++m)
            for (long s = grid.s_min; s <= grid.s_max; ++s)
                for (int st = 0; st < 2; ++st) {
                    if (st == 0 && !grid.nonstar) continue;
                    if (st == 1 && !grid.star) continue;
                    ZetaQuery query{n, m, s, st == 1, grid.q};
                    validate_query(query);
                    CellResult cell;
                    cell.query = query;
                    bool any = false;
                    bool all_ok = true;
                    std::optional<Rational> consensus;
                    for (Route route : routes_for(query.star)) {
                        if (!route_valid(route, query)) continue;
                        RouteOutcome out;
                        out.route = route;
                        try {
                            out.value = eval_route(route, query);
                            out.evaluated = true;
                            if (inject_fault && *inject_fault == route)
                                out.value += Rational(1);
                            if (!consensus)
                                consensus = out.value;
                            else if (*consensus != out.value)
                                all_ok = false;
                            any = true;
                        } catch (const std::exception& e) {
                            out.error = e.what();
                            all_ok = false;
                        }
                        cell.outcomes.push_back(std::move(out));
                    }
                    if (cell.outcomes.empty()) continue;
                    cell.agree = any && all_ok;
                    cells.push_back(std::move(cell));
                }
    return cells;
}

}  // namespace qmzeta
