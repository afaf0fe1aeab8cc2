#include "qmzeta/zeta.hpp"

#include <functional>
#include <numeric>

#include "qmzeta/qstirling.hpp"
#include "qmzeta/ring_matrix.hpp"
#include "qmzeta/symfun.hpp"
#include "qmzeta/trunc_series.hpp"

namespace qmzeta {

std::string QSpec::label(long n) const {
    if (kind == Kind::RationalValue) return value.to_string();
    if (root_exponent == 1) return "zeta_" + std::to_string(n);
    return "zeta_" + std::to_string(n) + "^" + std::to_string(root_exponent);
}

void validate_query(const ZetaQuery& query) {
    if (query.n < 2) throw std::invalid_argument("query: n must be >= 2");
    if (query.m < 0) throw std::invalid_argument("query: m must be >= 0");
    if (query.s < 1) throw std::invalid_argument("query: s must be >= 1");
    if (query.q.is_root()) {
        long a = query.q.root_exponent % query.n;
        if (a < 0) a += query.n;
        if (std::gcd(a, query.n) != 1)
            throw std::invalid_argument("query: root exponent must be coprime to n");
        return;
    }
    if (query.q.value == Rational(1))
        throw std::invalid_argument("query: rational q must differ from 1");
    Rational p(1);
    for (long i = 1; i <= query.n - 1; ++i) {
        p *= query.q.value;
        if (p == Rational(1))
            throw std::invalid_argument("query: q^" + std::to_string(i) +
                                        " = 1; use the root-of-unity form instead");
    }
}

const char* route_name(Route route) {
    switch (route) {
        case Route::Brute: return "brute";
        case Route::Stirling: return "stirling";
        case Route::ClosedS1: return "closed-s1";
        case Route::ClosedS2Binomial: return "closed-s2-binomial";
        case Route::ClosedS2RStirling: return "closed-s2-rstirling";
        case Route::M1Det: return "m1-det";
        case Route::Newton: return "newton";
        case Route::Bell: return "bell";
        case Route::SumRule: return "sum-rule";
        case Route::Recurrence: return "recurrence";
        case Route::GenFun: return "genfun";
    }
    return "?";
}

std::optional<Route> route_from_name(std::string_view name) {
    static const Route all[] = {
        Route::Brute,          Route::Stirling, Route::ClosedS1, Route::ClosedS2Binomial,
        Route::ClosedS2RStirling, Route::M1Det, Route::Newton,   Route::Bell,
        Route::SumRule,        Route::Recurrence, Route::GenFun,
    };
    for (Route r : all)
        if (name == route_name(r)) return r;
    return std::nullopt;
}

const std::vector<Route>& routes_for(bool star) {
    static const std::vector<Route> star_routes = {
        Route::Brute, Route::Stirling, Route::Bell,
        Route::SumRule, Route::Recurrence, Route::GenFun,
    };
    static const std::vector<Route> nonstar_routes = {
        Route::Brute,   Route::Stirling, Route::ClosedS1, Route::ClosedS2Binomial,
        Route::ClosedS2RStirling, Route::M1Det, Route::Newton,
    };
    return star ? star_routes : nonstar_routes;
}

bool route_valid(Route route, const ZetaQuery& query) {
    const bool root = query.q.is_root();
    const long n = query.n, m = query.m, s = query.s;
    if (query.star) {
        switch (route) {
            case Route::Brute:
            case Route::Stirling: return true;
            case Route::Bell:
            case Route::GenFun: return root;
            case Route::SumRule: return root && m == 2;
            case Route::Recurrence:
                if (!root || s < 1 || s > 3) return false;
                return m == 0 || m <= n / s - 1;
            default: return false;
        }
    }
    const bool in_depth = m <= n - 1;
    switch (route) {
        case Route::Brute:
        case Route::Stirling: return in_depth;
        case Route::ClosedS1: return root && s == 1 && in_depth;
        case Route::ClosedS2Binomial:
        case Route::ClosedS2RStirling: return root && s == 2 && in_depth;
        case Route::M1Det: return root && m == 1;
        case Route::Newton: return root && in_depth;
        default: return false;
    }
}

std::string route_requirement(Route route, bool star) {
    if (star) {
        switch (route) {
            case Route::Brute: return "star: any admissible q, any m >= 0";
            case Route::Stirling: return "star: any admissible q, any m >= 0";
            case Route::Bell: return "star: root of unity, any m >= 0";
            case Route::GenFun: return "star: root of unity, any m >= 0";
            case Route::SumRule: return "star: root of unity, m = 2";
            case Route::Recurrence:
                return "star: root of unity, s in {1,2,3}, m <= floor(n/s) - 1 (or m = 0)";
            default: return "not a star route";
        }
    }
    switch (route) {
        case Route::Brute: return "non-star: any admissible q, m <= n-1";
        case Route::Stirling: return "non-star: any admissible q, m <= n-1";
        case Route::ClosedS1: return "non-star: root of unity, s = 1, m <= n-1";
        case Route::ClosedS2Binomial:
        case Route::ClosedS2RStirling: return "non-star: root of unity, s = 2, m <= n-1";
        case Route::M1Det: return "non-star: root of unity, m = 1";
        case Route::Newton: return "non-star: root of unity, m <= n-1";
        default: return "not a non-star route";
    }
}

namespace {

/// sum over index tuples 1 <= i_1 (< or <=) ... (< or <=) i_m <= len(u) of
/// prod_j u[i_j - 1]
template <class F>
F tuple_sum(const std::vector<F>& u, long m, bool weak, const F& zero, const F& one) {
    const long len = static_cast<long>(u.size());
    std::function<F(long, long)> rec = [&](long lo, long remaining) -> F {
        if (remaining == 0) return one;
        F acc = zero;
        const long hi = weak ? len : len - remaining + 1;
        for (long i = lo; i <= hi; ++i)
            acc += u[static_cast<size_t>(i - 1)] * rec(weak ? i : i + 1, remaining - 1);
        return acc;
    };
    return rec(1, m);
}

template <class F>
F z_stirling_impl(QContext<F>& ctx, long n, long m, long s, bool star) {
    const F one_minus_q = ctx.one() - ctx.q();
    if (star) {
        F num = stirling2(ctx, n + m - 1, n - 1, 1, -s);
        return num * one_minus_q.pow(m * s).inverse();
    }
    F num = stirling1(ctx, n, m + 1, 1, s);
    F qfac = ctx.one();
    for (long i = 1; i <= n - 1; ++i) qfac = qfac * ctx.qnum(i);
    F denom = one_minus_q.pow(m * s) * qfac.pow(s);
    return num * denom.inverse();
}

void require_nonstar_depth(const ZetaQuery& query, const char* who) {
    if (!query.star && query.m > query.n - 1)
        throw OutOfValidityError(std::string(who) + ": strict sums need m <= n-1");
}

/// Y-coefficients a_0..a_(s-1) of the degree-s monic polynomial
/// (-1)^s ((1-Y)^s - X); a_0 carries the X term.
std::vector<UniPoly> root_poly_low_coeffs(long s) {
    std::vector<UniPoly> a;
    a.reserve(static_cast<size_t>(s));
    for (long k = 0; k < s; ++k) {
        Rational c = binomial(s, k);
        if ((s + k) % 2 != 0) c = -c;
        a.push_back(UniPoly(c));
    }
    a[0] -= UniPoly::monomial(1, Rational((s % 2 == 0) ? 1 : -1));
    return a;
}

RingMatrix<TruncSeries> companion_series(long s, long order) {
    auto a = root_poly_low_coeffs(s);
    RingMatrix<TruncSeries> c(s, TruncSeries::zero(order));
    for (long j = 0; j + 1 < s; ++j) c.at(j + 1, j) = TruncSeries::one(order);
    for (long i = 0; i < s; ++i) c.at(i, s - 1) = TruncSeries(-a[static_cast<size_t>(i)], order);
    return c;
}

RingMatrix<UniPoly> companion_poly(long s) {
    auto a = root_poly_low_coeffs(s);
    RingMatrix<UniPoly> c(s, UniPoly());
    for (long j = 0; j + 1 < s; ++j) c.at(j + 1, j) = UniPoly(Rational(1));
    for (long i = 0; i < s; ++i) c.at(i, s - 1) = -a[static_cast<size_t>(i)];
    return c;
}

/// Theorem weight for the s = 3 recurrence at gap d = m - j.
Rational rec3_weight(long n, long d) {
    Rational acc(0);
    for (long l = 0; l <= (d + 1) / 2; ++l) {
        for (long k = l; k <= d - l + 1; ++k) {
            Rational t = Rational(3).pow(d - l - k + 1) * Rational(-2).pow(k - l);
            t /= Rational(d - l + 1);
            t *= binomial(d - l + 1, k);
            t *= binomial(k, l);
            t *= binomial(n + d - l - k, 3 * d - 3 * l + 2);
            acc += t;
        }
    }
    Rational tail = binomial(n - 1, 3 * d + 2) + binomial(n - 1, d);
    tail /= Rational(d + 1);
    if (d % 2 != 0) tail = -tail;
    return acc + tail;
}

}  // namespace

Rational z_brute(const ZetaQuery& query) {
    validate_query(query);
    require_nonstar_depth(query, "z_brute");
    const long n = query.n, m = query.m, s = query.s;
    if (query.q.is_root()) {
        const CycloElem z = CycloElem::zeta_power(n, query.q.root_exponent);
        const CycloElem one = CycloElem::from_rational(n, Rational(1));
        std::vector<CycloElem> u;
        u.reserve(static_cast<size_t>(n - 1));
        CycloElem p = one;
        for (long i = 1; i <= n - 1; ++i) {
            p = p * z;
            u.push_back((one - p).pow(-s));
        }
        return tuple_sum(u, m, query.star, CycloElem(n), one).as_rational();
    }
    std::vector<Rational> u;
    u.reserve(static_cast<size_t>(n - 1));
    Rational p(1);
    for (long i = 1; i <= n - 1; ++i) {
        p *= query.q.value;
        u.push_back((Rational(1) - p).pow(-s));
    }
    return tuple_sum(u, m, query.star, Rational(0), Rational(1));
}

Rational z_stirling(const ZetaQuery& query) {
    validate_query(query);
    require_nonstar_depth(query, "z_stirling");
    if (query.q.is_root()) {
        auto ctx = root_context(query.n, query.q.root_exponent);
        return z_stirling_impl(*ctx, query.n, query.m, query.s, query.star).as_rational();
    }
    auto ctx = rational_context(query.q.value);
    return z_stirling_impl(*ctx, query.n, query.m, query.s, query.star);
}

Rational z_root_closed_s1(long n, long m) {
    if (n < 2 || m < 0 || m > n - 1)
        throw OutOfValidityError("closed-s1: need n >= 2, 0 <= m <= n-1");
    return binomial(n - 1, m) / Rational(m + 1);
}

Rational z_root_closed_s2(long n, long m, S2Form form) {
    if (n < 2 || m < 0 || m > n - 1)
        throw OutOfValidityError("closed-s2: need n >= 2, 0 <= m <= n-1");
    if (form == S2Form::Binomial) {
        Rational odd = binomial(n - 1, 2 * m + 1);
        if (m % 2 != 0) odd = -odd;
        return (binomial(n - 1, m) + odd) / (Rational(n) * Rational(m + 1));
    }
    Rational acc(0);
    Rational neg_n_pow(1);
    for (long k = 0; k <= m; ++k) {
        acc += r_stirling1_q1(2 * m + 2, m + k + 2, m + 1) * neg_n_pow;
        neg_n_pow *= Rational(-n);
    }
    return Rational(2) * factorial(m) / factorial(2 * m + 2) * binomial(n - 1, m) * acc;
}

Rational z_root_m1_det(long n, long s) {
    if (n < 2 || s < 1) throw OutOfValidityError("m1-det: need n >= 2, s >= 1");
    std::vector<Rational> first_col(static_cast<size_t>(s));
    std::vector<Rational> band(static_cast<size_t>(s - 1));
    std::vector<Rational> superdiag(static_cast<size_t>(s - 1), Rational(1));
    for (long i = 1; i <= s; ++i)
        first_col[static_cast<size_t>(i - 1)] = Rational(i, i + 1) * binomial(n - 1, i);
    for (long k = 1; k <= s - 1; ++k)
        band[static_cast<size_t>(k - 1)] = binomial(n - 1, k) / Rational(k + 1);
    return hessenberg_det(first_col, band, superdiag);
}

Rational z_root_newton(long n, long m, long s) {
    if (n < 2 || m < 0 || m > n - 1 || s < 1)
        throw OutOfValidityError("newton: need n >= 2, 0 <= m <= n-1, s >= 1");
    std::vector<Rational> g(static_cast<size_t>(m));
    for (long j = 1; j <= m; ++j) g[static_cast<size_t>(j - 1)] = z_root_m1_det(n, j * s);
    return e_from_powersums(g, m);
}

Rational z_star_root_bell(long n, long m, long s) {
    if (n < 2 || m < 0 || s < 1)
        throw OutOfValidityError("bell: need n >= 2, m >= 0, s >= 1");
    if (m == 0) return Rational(1);
    std::vector<Rational> xs(static_cast<size_t>(m));
    for (long j = 1; j <= m; ++j)
        xs[static_cast<size_t>(j - 1)] = factorial(j - 1) * z_root_m1_det(n, j * s);
    return bell_complete(xs, m) / factorial(m);
}

Rational z_star_root_sum_rule(long n, long s) {
    if (n < 2 || s < 1) throw OutOfValidityError("sum-rule: need n >= 2, s >= 1");
    // weak depth-2 sum = strict part + diagonal part
    std::vector<Rational> g = {z_root_m1_det(n, s), z_root_m1_det(n, 2 * s)};
    return e_from_powersums(g, 2) + g[1];
}

Rational z_star_root_recurrence(long n, long m, long s) {
    if (n < 2 || m < 0 || s < 1 || s > 3)
        throw OutOfValidityError("recurrence: need n >= 2, m >= 0, s in {1,2,3}");
    if (m > 0 && m > n / s - 1)
        throw OutOfValidityError("recurrence: need m <= floor(n/s) - 1, got m=" +
                                 std::to_string(m) + " at n=" + std::to_string(n) +
                                 ", s=" + std::to_string(s));
    std::vector<Rational> z(static_cast<size_t>(m) + 1);
    z[0] = Rational(1);
    const Rational n_sq_inv = Rational(1) / (Rational(n) * Rational(n));
    for (long mm = 1; mm <= m; ++mm) {
        Rational acc(0);
        for (long j = 0; j <= mm - 1; ++j) {
            const long d = mm - j;
            Rational w;
            if (s == 1) {
                w = binomial(n - 1, d) / Rational(d + 1);
                if (d % 2 == 0) w = -w;  // (-1)^(d+1)
            } else if (s == 2) {
                w = Rational(2) * binomial(n, 2 * d + 2) + ((d % 2 == 0) ? binomial(n, d + 1)
                                                                         : -binomial(n, d + 1));
            } else {
                w = rec3_weight(n, d);
            }
            acc += w * z[static_cast<size_t>(j)];
        }
        z[static_cast<size_t>(mm)] = (s == 1) ? acc : -(n_sq_inv * acc);
    }
    return z[static_cast<size_t>(m)];
}

std::vector<Rational> z_star_root_genfun(long n, long m_max, long s) {
    if (n < 2 || m_max < 0 || s < 1)
        throw OutOfValidityError("genfun: need n >= 2, m_max >= 0, s >= 1");
    const long order = m_max + 2;
    RingMatrix<TruncSeries> c = companion_series(s, order);
    RingMatrix<TruncSeries> cn = c.pow(static_cast<unsigned long>(n));
    RingMatrix<TruncSeries> delta =
        RingMatrix<TruncSeries>::identity(s, TruncSeries::zero(order)) - cn;
    TruncSeries d = det_fl(delta);
    if (s % 2 != 0) d = -d;  // d = (-1)^s det(I - C^n) = prod_j ((1-zeta^j)^s - X)
    const Rational ns = Rational(n).pow(s);
    if (!d.coeff(0).is_zero() || d.coeff(1) != -ns)
        throw ValuationError("genfun: denominator valuation check failed at n=" +
                             std::to_string(n) + ", s=" + std::to_string(s));
    std::vector<Rational> shifted(static_cast<size_t>(order - 1));
    for (long i = 0; i + 1 < order; ++i) shifted[static_cast<size_t>(i)] = d.coeff(i + 1);
    TruncSeries inv = TruncSeries(UniPoly(std::move(shifted)), order - 1).inverse();
    std::vector<Rational> out(static_cast<size_t>(m_max) + 1);
    for (long m = 0; m <= m_max; ++m) out[static_cast<size_t>(m)] = -(ns * inv.coeff(m));
    return out;
}

BiPoly f_poly(long s, long l) {
    if (s < 1 || s > 6)
        throw std::invalid_argument("f_poly: dimension cap requires 1 <= s <= 6");
    if (l < 0 || l > s) throw std::invalid_argument("f_poly: need 0 <= l <= s");
    if (l == 0) return BiPoly::constant(Rational(1)) - BiPoly::y();
    RingMatrix<UniPoly> c = companion_poly(s);
    std::vector<std::vector<long>> subsets;
    std::vector<long> cur;
    std::function<void(long)> gen = [&](long start) {
        if (static_cast<long>(cur.size()) == l) {
            subsets.push_back(cur);
            return;
        }
        for (long i = start; i < s; ++i) {
            cur.push_back(i);
            gen(i + 1);
            cur.pop_back();
        }
    };
    gen(0);
    const long dim = static_cast<long>(subsets.size());
    RingMatrix<UniPoly> compound(dim, UniPoly());
    for (long a = 0; a < dim; ++a)
        for (long b = 0; b < dim; ++b) {
            RingMatrix<UniPoly> minor(l, UniPoly());
            for (long i = 0; i < l; ++i)
                for (long j = 0; j < l; ++j)
                    minor.at(i, j) = c.at(subsets[static_cast<size_t>(a)][static_cast<size_t>(i)],
                                          subsets[static_cast<size_t>(b)][static_cast<size_t>(j)]);
            compound.at(a, b) = det_fl(minor);
        }
    // det(I - Y * Lambda) = sum_k c_k Y^k with c_k the characteristic
    // coefficients of the compound matrix
    return BiPoly::from_y_coeffs(char_poly_fl(compound));
}

Rational eval_route(Route route, const ZetaQuery& query) {
    validate_query(query);
    if (!route_valid(route, query))
        throw OutOfValidityError(std::string("route '") + route_name(route) +
                                 "' out of validity; requires " +
                                 route_requirement(route, query.star));
    switch (route) {
        case Route::Brute: return z_brute(query);
        case Route::Stirling: return z_stirling(query);
        case Route::ClosedS1: return z_root_closed_s1(query.n, query.m);
        case Route::ClosedS2Binomial:
            return z_root_closed_s2(query.n, query.m, S2Form::Binomial);
        case Route::ClosedS2RStirling:
            return z_root_closed_s2(query.n, query.m, S2Form::RStirling);
        case Route::M1Det: return z_root_m1_det(query.n, query.s);
        case Route::Newton: return z_root_newton(query.n, query.m, query.s);
        case Route::Bell: return z_star_root_bell(query.n, query.m, query.s);
        case Route::SumRule: return z_star_root_sum_rule(query.n, query.s);
        case Route::Recurrence: return z_star_root_recurrence(query.n, query.m, query.s);
        case Route::GenFun:
            return z_star_root_genfun(query.n, query.m, query.s).back();
    }
    throw std::logic_error("eval_route: unreachable");
}

}  // namespace qmzeta
