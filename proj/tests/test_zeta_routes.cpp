#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qmzeta/fit.hpp"
#include "qmzeta/zeta.hpp"
#include "test_util.hpp"

using qmzeta::QSpec;
using qmzeta::Rational;
using qmzeta::Route;
using qmzeta::ZetaQuery;
using qmztest::frac;

namespace {

Rational poly_at(std::initializer_list<const char*> ascending, long n) {
    Rational acc(0), p(1);
    const Rational nn(n);
    for (const char* c : ascending) {
        acc += Rational::from_string(c) * p;
        p *= nn;
    }
    return acc;
}

ZetaQuery root_query(long n, long m, long s, bool star, long exponent = 1) {
    return ZetaQuery{n, m, s, star, QSpec::root(exponent)};
}

ZetaQuery rational_query(long n, long m, long s, bool star, Rational q) {
    return ZetaQuery{n, m, s, star, QSpec::rational(std::move(q))};
}

}  // namespace

TEST_CASE("query validation") {
    CHECK_NOTHROW(qmzeta::validate_query(root_query(2, 0, 1, true)));
    CHECK_THROWS_AS(qmzeta::validate_query(root_query(1, 0, 1, true)), std::invalid_argument);
    CHECK_THROWS_AS(qmzeta::validate_query(root_query(4, 0, 1, true, 2)), std::invalid_argument);
    CHECK_THROWS_AS(qmzeta::validate_query(root_query(2, -1, 1, true)), std::invalid_argument);
    CHECK_THROWS_AS(qmzeta::validate_query(root_query(2, 0, 0, true)), std::invalid_argument);
    CHECK_NOTHROW(qmzeta::validate_query(rational_query(3, 1, 1, true, frac(2))));
    CHECK_THROWS_AS(qmzeta::validate_query(rational_query(3, 1, 1, true, frac(1))),
                    std::invalid_argument);
    // (-1)^2 = 1 makes 1 - q^2 vanish inside the n = 3 sum
    CHECK_THROWS_AS(qmzeta::validate_query(rational_query(3, 1, 1, true, frac(-1))),
                    std::invalid_argument);
    CHECK_NOTHROW(qmzeta::validate_query(rational_query(2, 1, 1, true, frac(-2))));

    CHECK(QSpec::root().label(5) == "zeta_5");
    CHECK(QSpec::root(2).label(5) == "zeta_5^2");
    CHECK(QSpec::rational(frac(3, 5)).label(7) == "3/5");
}

TEST_CASE("route name round trip") {
    for (bool star : {false, true}) {
        for (Route r : qmzeta::routes_for(star)) {
            auto back = qmzeta::route_from_name(qmzeta::route_name(r));
            REQUIRE(back.has_value());
            CHECK(*back == r);
            CHECK_FALSE(qmzeta::route_requirement(r, star).empty());
        }
    }
    CHECK_FALSE(qmzeta::route_from_name("bogus").has_value());
    CHECK(qmzeta::routes_for(true).size() == 6);
    CHECK(qmzeta::routes_for(false).size() == 7);
}

TEST_CASE("brute force sums") {
    CHECK(qmzeta::z_brute(root_query(2, 3, 1, true)) == frac(1, 8));
    CHECK(qmzeta::z_brute(root_query(3, 1, 2, true)) == frac(1, 3));
    CHECK(qmzeta::z_brute(rational_query(3, 1, 1, true, frac(2))) == frac(-4, 3));
    CHECK(qmzeta::z_brute(root_query(3, 1, 1, false)) == frac(1));
    CHECK(qmzeta::z_brute(root_query(4, 3, 1, false)) == frac(1, 4));
    CHECK(qmzeta::z_brute(root_query(9, 0, 2, true)) == frac(1));
    CHECK(qmzeta::z_brute(root_query(9, 0, 2, false)) == frac(1));
}

TEST_CASE("stirling bridge") {
    CHECK(qmzeta::z_stirling(rational_query(3, 1, 1, true, frac(2))) == frac(-4, 3));
    for (bool star : {false, true}) {
        ZetaQuery q = rational_query(4, 2, 1, star, frac(3, 5));
        CHECK(qmzeta::z_stirling(q) == qmzeta::z_brute(q));
        CHECK(qmzeta::z_stirling(rational_query(5, 0, 2, star, frac(3, 5))) == frac(1));
    }
    ZetaQuery at_root = root_query(6, 3, 2, true);
    CHECK(qmzeta::z_stirling(at_root) == qmzeta::z_brute(at_root));
    ZetaQuery at_root_nonstar = root_query(6, 3, 2, false);
    CHECK(qmzeta::z_stirling(at_root_nonstar) == qmzeta::z_brute(at_root_nonstar));
}

TEST_CASE("closed forms at s = 1 and s = 2") {
    CHECK(qmzeta::z_root_closed_s1(5, 2) == frac(2));
    CHECK(qmzeta::z_root_closed_s1(7, 0) == frac(1));
    CHECK(qmzeta::z_root_closed_s1(3, 1) == frac(1));

    using qmzeta::S2Form;
    CHECK(qmzeta::z_root_closed_s2(5, 1, S2Form::Binomial) == frac(0));
    CHECK(qmzeta::z_root_closed_s2(5, 1, S2Form::RStirling) == frac(0));
    CHECK(qmzeta::z_root_closed_s2(7, 1, S2Form::Binomial) == frac(-1));
    CHECK(qmzeta::z_root_closed_s2(7, 1, S2Form::RStirling) == frac(-1));
    for (long n = 2; n <= 12; ++n)
        for (long m = 0; m <= std::min<long>(4, n - 1); ++m)
            CHECK(qmzeta::z_root_closed_s2(n, m, S2Form::Binomial) ==
                  qmzeta::z_root_closed_s2(n, m, S2Form::RStirling));
}

TEST_CASE("depth one determinant") {
    for (long n = 2; n <= 9; ++n)
        CHECK(qmzeta::z_root_m1_det(n, 1) == Rational(n - 1, 2));
    CHECK(qmzeta::z_root_m1_det(5, 2) == frac(0));
    CHECK(qmzeta::z_root_m1_det(3, 3) == frac(0));

    // frozen expansion of the depth-1, level-6 value as a polynomial in n
    const std::initializer_list<const char*> m1s6 = {
        "-19087/60480", "1/2", "-137/720", "0", "17/2880", "0", "-1/30240"};
    for (long n = 2; n <= 8; ++n) CHECK(qmzeta::z_root_m1_det(n, 6) == poly_at(m1s6, n));
    CHECK(qmzeta::z_brute(root_query(5, 1, 6, false)) == poly_at(m1s6, 5));
}

TEST_CASE("newton route") {
    for (long n = 2; n <= 8; ++n)
        for (long s = 1; s <= 3; ++s)
            CHECK(qmzeta::z_root_newton(n, 1, s) == qmzeta::z_root_m1_det(n, s));

    ZetaQuery q = root_query(6, 3, 2, false);
    CHECK(qmzeta::z_root_newton(6, 3, 2) == qmzeta::z_brute(q));

    // frozen expansion of the depth-2, level-3 value as a polynomial in n
    const std::initializer_list<const char*> m2s3 = {
        "3449/15120", "-7/16", "769/2880", "-1/16", "7/1440", "0", "1/60480"};
    for (long n = 3; n <= 8; ++n) CHECK(qmzeta::z_root_newton(n, 2, 3) == poly_at(m2s3, n));
    CHECK(qmzeta::z_brute(root_query(4, 2, 3, false)) == poly_at(m2s3, 4));
}

TEST_CASE("bell route") {
    for (long n = 2; n <= 8; ++n)
        for (long s = 1; s <= 3; ++s) {
            Rational g1 = qmzeta::z_root_m1_det(n, s);
            Rational g2 = qmzeta::z_root_m1_det(n, 2 * s);
            CHECK(qmzeta::z_star_root_bell(n, 2, s) == (g1 * g1 + g2) / frac(2));
            CHECK(qmzeta::z_star_root_bell(n, 0, s) == frac(1));
        }

    const std::initializer_list<const char*> worked = {
        "-5291/60480", "3780/60480", "4641/60480", "-3780/60480", "651/60480", "0", "-1/60480"};
    // -(n+1)(n-1)(n^4 - 650 n^2 + 3780 n - 5291) / (12 * 7!) expanded
    for (long n = 2; n <= 6; ++n) {
        Rational direct = -(Rational(n + 1) * Rational(n - 1) *
                            (Rational(n).pow(4) - frac(650) * Rational(n).pow(2) +
                             frac(3780) * Rational(n) - frac(5291))) /
                          frac(12 * 5040);
        CHECK(qmzeta::z_star_root_bell(n, 2, 3) == direct);
        CHECK(poly_at(worked, n) == direct);
    }

    ZetaQuery q = root_query(5, 3, 2, true);
    CHECK(qmzeta::z_star_root_bell(5, 3, 2) == qmzeta::z_brute(q));
}

TEST_CASE("sum rule at depth two") {
    CHECK(qmzeta::z_star_root_sum_rule(5, 1) == frac(2));
    CHECK(qmzeta::z_star_root_sum_rule(3, 2) == frac(0));
    for (long n = 2; n <= 8; ++n)
        for (long s = 1; s <= 3; ++s)
            CHECK(qmzeta::z_star_root_sum_rule(n, s) == qmzeta::z_star_root_bell(n, 2, s));
}

TEST_CASE("recurrence routes") {
    CHECK(qmzeta::z_star_root_recurrence(6, 0, 2) == frac(1));

    for (long n = 7; n <= 10; ++n) {
        Rational expect = Rational(n + 1) * Rational(n - 1) *
                          (frac(2) * Rational(n).pow(4) - frac(145) * Rational(n).pow(2) +
                           frac(863)) /
                          frac(60480);
        CHECK(qmzeta::z_star_root_recurrence(n, 6, 1) == expect);
    }

    for (long n = 8; n <= 10; ++n) {
        Rational expect = -(Rational(n + 1) * Rational(n - 1) *
                            (frac(10) * Rational(n).pow(4) - frac(126) * Rational(n).pow(3) +
                             frac(241) * Rational(n).pow(2) + frac(1134) * Rational(n) -
                             frac(2699))) /
                          frac(12 * 5040);
        CHECK(qmzeta::z_star_root_recurrence(n, 3, 2) == expect);
    }

    for (long n = 6; n <= 9; ++n)
        CHECK(qmzeta::z_star_root_recurrence(n, 1, 3) ==
              -Rational((n - 1) * (n - 3), 8));

    CHECK_THROWS_AS(qmzeta::eval_route(Route::Recurrence, root_query(7, 3, 2, true)),
                    qmzeta::OutOfValidityError);
}

TEST_CASE("generating function route") {
    auto seq = qmzeta::z_star_root_genfun(4, 3, 1);
    REQUIRE(seq.size() == 4);
    CHECK(seq[0] == frac(1));
    CHECK(seq[1] == frac(3, 2));
    CHECK(seq[2] == frac(5, 4));
    CHECK(seq[3] == frac(5, 8));

    CHECK(qmzeta::z_star_root_genfun(5, 1, 2)[1] == frac(0));

    ZetaQuery q = root_query(5, 2, 4, true);
    CHECK(qmzeta::z_star_root_genfun(5, 2, 4)[2] == qmzeta::z_brute(q));

    // the identity keeps producing values past m = n - 1
    for (long m = 0; m <= 4; ++m)
        CHECK(qmzeta::z_star_root_genfun(2, 4, 1)[static_cast<size_t>(m)] ==
              qmzeta::z_brute(root_query(2, m, 1, true)));
}

TEST_CASE("depth one coincidence of star and non-star") {
    for (long n = 2; n <= 7; ++n)
        for (long s = 1; s <= 4; ++s) {
            Rational v = qmzeta::z_root_m1_det(n, s);
            CHECK(qmzeta::z_star_root_bell(n, 1, s) == v);
            CHECK(qmzeta::z_star_root_genfun(n, 1, s)[1] == v);
            CHECK(qmzeta::z_brute(root_query(n, 1, s, true)) == v);
            CHECK(qmzeta::z_brute(root_query(n, 1, s, false)) == v);
            CHECK(qmzeta::z_stirling(root_query(n, 1, s, true)) == v);
            CHECK(qmzeta::z_stirling(root_query(n, 1, s, false)) == v);
        }
}

TEST_CASE("galois invariance") {
    for (long a : {2L, 3L, 4L}) {
        CHECK(qmzeta::z_brute(root_query(5, 2, 1, true, a)) ==
              qmzeta::z_brute(root_query(5, 2, 1, true)));
    }
    for (long a : {5L, 7L, 11L}) {
        CHECK(qmzeta::z_brute(root_query(12, 2, 2, false, a)) ==
              qmzeta::z_brute(root_query(12, 2, 2, false)));
    }
    // closed-form routes see only n, so brute at a twisted root must match them
    CHECK(qmzeta::z_brute(root_query(7, 2, 1, false, 3)) == qmzeta::z_root_closed_s1(7, 2));
    CHECK(qmzeta::z_stirling(root_query(7, 2, 1, true, 3)) ==
          qmzeta::z_star_root_bell(7, 2, 1));
}

TEST_CASE("route dispatch") {
    ZetaQuery q = root_query(6, 2, 1, true);
    CHECK(qmzeta::route_valid(Route::GenFun, q));
    CHECK(qmzeta::eval_route(Route::GenFun, q) == qmzeta::z_star_root_genfun(6, 2, 1)[2]);
    CHECK(qmzeta::eval_route(Route::Brute, q) == qmzeta::eval_route(Route::SumRule, q));

    ZetaQuery bad_s = root_query(6, 2, 2, false);
    CHECK_FALSE(qmzeta::route_valid(Route::ClosedS1, bad_s));
    CHECK_THROWS_AS(qmzeta::eval_route(Route::ClosedS1, bad_s), qmzeta::OutOfValidityError);

    ZetaQuery deep = root_query(4, 5, 1, false);
    for (Route r : qmzeta::routes_for(false)) CHECK_FALSE(qmzeta::route_valid(r, deep));

    ZetaQuery rational_q = rational_query(5, 1, 1, false, frac(2));
    CHECK(qmzeta::route_valid(Route::Brute, rational_q));
    CHECK(qmzeta::route_valid(Route::Stirling, rational_q));
    CHECK_FALSE(qmzeta::route_valid(Route::Newton, rational_q));
    CHECK_FALSE(qmzeta::route_valid(Route::M1Det, rational_q));
}
