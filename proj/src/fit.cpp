#include "qmzeta/fit.hpp"

#include <stdexcept>

namespace qmzeta {

FitResult fit_npoly(const Sampler& sample, long n_start, long max_samples) {
    if (max_samples < 2) throw std::invalid_argument("fit_npoly: max_samples must be >= 2");
    std::vector<Rational> values;
    std::vector<Rational> diag;  // diag[k] = f[x_(i-k), ..., x_i] after sample i
    std::vector<Rational> dd;    // dd[i] = f[x_0, ..., x_i]
    long zero_streak = 0;
    bool stabilized = false;
    for (long i = 0; i < max_samples; ++i) {
        values.push_back(sample(n_start + i));
        std::vector<Rational> next(static_cast<size_t>(i) + 1);
        next[0] = values.back();
        for (long k = 1; k <= i; ++k)
            next[static_cast<size_t>(k)] =
                (next[static_cast<size_t>(k - 1)] - diag[static_cast<size_t>(k - 1)]) /
                Rational(k);  // nodes are consecutive integers: x_i - x_(i-k) = k
        diag = std::move(next);
        dd.push_back(diag.back());
        if (dd.back().is_zero()) {
            if (++zero_streak >= 2) {
                stabilized = true;
                break;
            }
        } else {
            zero_streak = 0;
        }
    }
    if (!stabilized)
        throw NoStabilizationError("fit_npoly: degree did not stabilize within " +
                                   std::to_string(max_samples) + " samples");
    UniPoly poly;
    UniPoly basis(Rational(1));
    const UniPoly x = UniPoly::x();
    for (size_t k = 0; k < dd.size(); ++k) {
        if (!dd[k].is_zero()) poly += dd[k] * basis;
        basis = basis * (x - UniPoly(Rational(n_start + static_cast<long>(k))));
    }
    for (size_t t = 0; t < values.size(); ++t) {
        if (poly.eval(Rational(n_start + static_cast<long>(t))) != values[t])
            throw std::logic_error("fit_npoly: interpolant fails to reproduce a sample");
    }
    return {poly, n_start, static_cast<long>(values.size())};
}

long route_min_n(Route route, long m, long s, bool star) {
    auto check = [&](bool ok, const char* why) {
        if (!ok) throw OutOfValidityError(std::string("route '") + route_name(route) +
                                          "' cannot fit this (m, s): " + why);
    };
    check(m >= 0 && s >= 1, "need m >= 0 and s >= 1");
    if (star) {
        switch (route) {
            case Route::Brute:
            case Route::Stirling:
            case Route::Bell:
            case Route::GenFun: return 2;
            case Route::SumRule:
                check(m == 2, "sum-rule only covers m = 2");
                return 2;
            case Route::Recurrence:
                check(s >= 1 && s <= 3, "recurrence needs s in {1,2,3}");
                return std::max<long>(2, s * (m + 1));
            default: check(false, "not a star route"); return 0;
        }
    }
    switch (route) {
        case Route::Brute:
        case Route::Stirling:
        case Route::Newton: return std::max<long>(2, m + 1);
        case Route::ClosedS1:
            check(s == 1, "closed-s1 needs s = 1");
            return std::max<long>(2, m + 1);
        case Route::ClosedS2Binomial:
        case Route::ClosedS2RStirling:
            check(s == 2, "closed-s2 needs s = 2");
            return std::max<long>(2, m + 1);
        case Route::M1Det:
            check(m == 1, "m1-det only covers m = 1");
            return 2;
        default: check(false, "not a non-star route"); return 0;
    }
}

FitResult fit_zeta_npoly(long m, long s, bool star, Route route, long n_start,
                         long max_samples) {
    const long start = n_start > 0 ? n_start : route_min_n(route, m, s, star);
    Sampler f = [m, s, star, route](long n) {
        ZetaQuery query{n, m, s, star, QSpec::root()};
        return eval_route(route, query);
    };
    return fit_npoly(f, start, max_samples);
}

}  // namespace qmzeta
