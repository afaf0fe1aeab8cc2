#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qmzeta/cyclotomic.hpp"
#include "qmzeta/unipoly.hpp"
#include "test_util.hpp"

using qmzeta::Rational;
using qmzeta::UniPoly;
using qmztest::upoly;

namespace {

UniPoly random_poly(std::mt19937& rng, long max_deg) {
    std::uniform_int_distribution<long> deg(0, max_deg);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::vector<Rational> cs(static_cast<size_t>(deg(rng)) + 1);
    for (auto& c : cs) c = Rational(num(rng), den(rng));
    return UniPoly(std::move(cs));
}

}  // namespace

TEST_CASE("polynomial basics") {
    CHECK(UniPoly().is_zero());
    CHECK(UniPoly().degree() == -1);
    CHECK(upoly({0, 0, 0}).is_zero());
    UniPoly p = upoly({-1, 0, 1});
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == Rational(-1));
    CHECK(p.coeff(1) == Rational(0));
    CHECK(p.coeff(2) == Rational(1));
    CHECK(p.coeff(17) == Rational(0));
    CHECK(p.leading() == Rational(1));
    CHECK(p.eval(Rational(3)) == Rational(8));
    CHECK(UniPoly::x() == upoly({0, 1}));
    CHECK(UniPoly::monomial(3, Rational(2, 5)) == qmztest::upolyq({Rational(0), Rational(0), Rational(0), Rational(2, 5)}));
}

TEST_CASE("polynomial products") {
    CHECK(upoly({1, 1}) * upoly({-1, 1}) == upoly({-1, 0, 1}));
    CHECK(upoly({1, 2}).pow(2) == upoly({1, 4, 4}));
    CHECK(upoly({0, 1}).pow(5) == UniPoly::monomial(5));
    CHECK(Rational(1, 2) * upoly({2, 4}) == upoly({1, 2}));
    CHECK((upoly({1, 1}) * UniPoly()).is_zero());
    CHECK(upoly({3, 0, 6}).monic() == qmztest::upolyq({Rational(1, 2), Rational(0), Rational(1)}));
    CHECK(upoly({1, 2}).shifted(2) == upoly({0, 0, 1, 2}));
    CHECK(upoly({1, 2, 3, 4}).truncated(2) == upoly({1, 2}));
}

TEST_CASE("euclidean division") {
    auto [q1, r1] = qmzeta::divrem(upoly({-1, 0, 1}), upoly({-1, 1}));
    CHECK(q1 == upoly({1, 1}));
    CHECK(r1.is_zero());

    // (Y^6 - 1) / ((Y-1)(Y+1)(Y^2+Y+1)) leaves the quotient Y^2 - Y + 1
    UniPoly divisor = upoly({-1, 1}) * upoly({1, 1}) * upoly({1, 1, 1});
    UniPoly y6m1 = UniPoly::monomial(6) - UniPoly(Rational(1));
    auto [q2, r2] = qmzeta::divrem(y6m1, divisor);
    CHECK(q2 == upoly({1, -1, 1}));
    CHECK(r2.is_zero());

    auto [q3, r3] = qmzeta::divrem(upoly({1, 1}), upoly({0, 0, 1}));
    CHECK(q3.is_zero());
    CHECK(r3 == upoly({1, 1}));

    CHECK_THROWS_AS(qmzeta::divrem(upoly({1}), UniPoly()), std::domain_error);

    std::mt19937 rng(23);
    for (int i = 0; i < 50; ++i) {
        UniPoly a = random_poly(rng, 8);
        UniPoly b = random_poly(rng, 4);
        if (b.is_zero()) continue;
        auto [q, r] = qmzeta::divrem(a, b);
        CHECK(a == q * b + r);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("extended gcd") {
    auto g1 = qmzeta::ext_gcd(upoly({1, 0, 1}), upoly({0, 1}));
    CHECK(g1.g == upoly({1}));
    CHECK(g1.u == upoly({1}));
    CHECK(g1.v == upoly({0, -1}));

    auto g2 = qmzeta::ext_gcd(upoly({-1, 0, 1}), upoly({-1, 1}));
    CHECK(g2.g == upoly({-1, 1}));
    CHECK(g2.u.is_zero());
    CHECK(g2.v == upoly({1}));

    const UniPoly phi5 = qmzeta::cyclotomic_poly(5);
    auto g3 = qmzeta::ext_gcd(phi5, upoly({-1, 1}));
    CHECK(g3.g == upoly({1}));
    CHECK(g3.u * phi5 + g3.v * upoly({-1, 1}) == upoly({1}));

    CHECK_THROWS_AS(qmzeta::ext_gcd(UniPoly(), UniPoly()), std::domain_error);

    std::mt19937 rng(31);
    for (int i = 0; i < 30; ++i) {
        UniPoly a = random_poly(rng, 6);
        UniPoly b = random_poly(rng, 4);
        if (a.is_zero() && b.is_zero()) continue;
        auto res = qmzeta::ext_gcd(a, b);
        CHECK(res.u * a + res.v * b == res.g);
        CHECK(res.g.leading() == Rational(1));
        CHECK(qmzeta::divrem(a, res.g).second.is_zero());
        CHECK(qmzeta::divrem(b, res.g).second.is_zero());
    }
}

TEST_CASE("polynomial rendering") {
    CHECK(upoly({-1, 0, 1}).to_string() == "X^2 - 1");
    CHECK(upoly({2}).to_string() == "2");
    CHECK(UniPoly().to_string() == "0");
    CHECK(upoly({-1, 1}).to_string("Y") == "Y - 1");
}
