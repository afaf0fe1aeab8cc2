#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmzeta/bipoly.hpp"
#include "qmzeta/errors.hpp"
#include "qmzeta/rational.hpp"

namespace qmzeta {

/// Where the deformation parameter q sits: at the primitive n-th root of
/// unity zeta_n^a (Root, with gcd(a, n) = 1), or at a generic rational value
/// (RationalValue, with q != 1 and q^i != 1 for 1 <= i <= n-1).
struct QSpec {
    enum class Kind { Root, RationalValue };

    Kind kind = Kind::Root;
    long root_exponent = 1;
    Rational value;

    static QSpec root(long exponent = 1) {
        QSpec q;
        q.kind = Kind::Root;
        q.root_exponent = exponent;
        return q;
    }

    static QSpec rational(Rational v) {
        QSpec q;
        q.kind = Kind::RationalValue;
        q.value = std::move(v);
        return q;
    }

    bool is_root() const { return kind == Kind::Root; }
    std::string label(long n) const;
};

/// One evaluation request: the sum length bound n, depth m, level s, the
/// star flag (weak vs strict index tuples), and the base point q.
struct ZetaQuery {
    long n = 2;
    long m = 1;
    long s = 1;
    bool star = false;
    QSpec q;
};

/// Throws std::invalid_argument unless n >= 2, m >= 0, s >= 1 and q is
/// admissible (primitive root exponent, or rational q with q^i != 1).
void validate_query(const ZetaQuery& query);

/// Evaluation routes. Brute and Stirling work at any admissible q; the rest
/// are root-of-unity routes. Star-only: Bell, SumRule, Recurrence, GenFun.
/// Non-star only: ClosedS1, ClosedS2*, M1Det, Newton.
enum class Route {
    Brute,
    Stirling,
    ClosedS1,
    ClosedS2Binomial,
    ClosedS2RStirling,
    M1Det,
    Newton,
    Bell,
    SumRule,
    Recurrence,
    GenFun,
};

const char* route_name(Route route);
std::optional<Route> route_from_name(std::string_view name);
/// All routes that can ever apply to star (resp. non-star) queries.
const std::vector<Route>& routes_for(bool star);
/// Whether the route covers this particular query.
bool route_valid(Route route, const ZetaQuery& query);
/// One-line description of the route's validity range, for diagnostics.
std::string route_requirement(Route route, bool star);
/// Evaluates the query along the given route; the caller is responsible for
/// checking route_valid first (invalid combinations throw OutOfValidityError).
Rational eval_route(Route route, const ZetaQuery& query);

/// Literal defining sum over strict (non-star) or weak (star) index tuples
/// 1 <= i_1 < ... < i_m <= n-1 of prod (1 - q^(i_j))^(-s), evaluated in
/// Q(zeta_n) or Q and certified rational. Non-star requires m <= n-1.
Rational z_brute(const ZetaQuery& query);

/// Via the bridge to q-generalized (1,s)-Stirling numbers: first kind entry
/// (n, m+1) over (1-q)^(ms) ([n-1]_q!)^s for non-star, second kind entry
/// (n+m-1, n-1) at level -s over (1-q)^(ms) for star.
Rational z_stirling(const ZetaQuery& query);

/// Non-star closed form at s = 1: binom(n-1, m) / (m+1).
Rational z_root_closed_s1(long n, long m);

enum class S2Form { Binomial, RStirling };

/// Non-star closed forms at s = 2: the binomial form
/// (binom(n-1,m) + (-1)^m binom(n-1,2m+1)) / (n(m+1)), or the r-Stirling
/// form with r = m+1 over the classical q -> 1 numbers.
Rational z_root_closed_s2(long n, long m, S2Form form);

/// Depth-1 value at any level s >= 1 as an s x s Hessenberg determinant with
/// first column (i/(i+1)) binom(n-1, i), bands binom(n-1, k)/(k+1), and unit
/// superdiagonal.
Rational z_root_m1_det(long n, long s);

/// Non-star value from depth-1 power sums via the Newton recurrence for
/// elementary symmetric functions. Requires m <= n-1.
Rational z_root_newton(long n, long m, long s);

/// Star value as a complete Bell polynomial in the depth-1 power sums
/// (partition-sum and determinant evaluations cross-checked internally).
Rational z_star_root_bell(long n, long m, long s);

/// Star value at depth 2 from the symmetric-function split: the strict sum
/// plus the diagonal, i.e. non-star depth 2 plus depth 1 at level 2s.
Rational z_star_root_sum_rule(long n, long s);

/// Star value by the binomial recurrences in n: available for s = 1 (any
/// 0 <= m <= n-1), s = 2 (m <= floor(n/2) - 1), s = 3 (m <= floor(n/3) - 1).
Rational z_star_root_recurrence(long n, long m, long s);

/// All star values for m = 0..m_max at once from the generating-function
/// identity: sum_m z*_m X^m = -n^s / E(X) where X * E(X) is the lifted
/// resultant det(I - C^n) over truncated power series, C the companion
/// matrix of (-1)^s((1-Y)^s - X). Signals ValuationError if the computed
/// denominator fails its structural checks.
std::vector<Rational> z_star_root_genfun(long n, long m_max, long s);

/// Characteristic polynomial det(I - Y * Lambda_l) of the l-th compound of
/// the companion matrix above, as a polynomial in X and Y; the convention
/// for l = 0 is 1 - Y. Requires 0 <= l <= s <= 6.
BiPoly f_poly(long s, long l);

}  // namespace qmzeta
