#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "doctest.h"
#include "qmzeta/cyclotomic.hpp"
#include "qmzeta/errors.hpp"
#include "test_util.hpp"

using qmzeta::CycloElem;
using qmzeta::Rational;
using qmzeta::UniPoly;
using qmztest::upoly;

TEST_CASE("euler phi") {
    CHECK(qmzeta::euler_phi(1) == 1);
    CHECK(qmzeta::euler_phi(2) == 1);
    CHECK(qmzeta::euler_phi(6) == 2);
    CHECK(qmzeta::euler_phi(12) == 4);
    CHECK(qmzeta::euler_phi(97) == 96);
    CHECK(qmzeta::euler_phi(100) == 40);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(qmzeta::cyclotomic_poly(1) == upoly({-1, 1}));
    CHECK(qmzeta::cyclotomic_poly(2) == upoly({1, 1}));
    CHECK(qmzeta::cyclotomic_poly(3) == upoly({1, 1, 1}));
    CHECK(qmzeta::cyclotomic_poly(4) == upoly({1, 0, 1}));
    CHECK(qmzeta::cyclotomic_poly(6) == upoly({1, -1, 1}));
    CHECK(qmzeta::cyclotomic_poly(12) == upoly({1, 0, -1, 0, 1}));

    for (long n = 1; n <= 60; ++n) {
        UniPoly prod(Rational(1));
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * qmzeta::cyclotomic_poly(d);
        CHECK(prod == UniPoly::monomial(n) - UniPoly(Rational(1)));
        CHECK(qmzeta::cyclotomic_poly(n).degree() == qmzeta::euler_phi(n));
    }
}

TEST_CASE("root of unity powers") {
    CHECK(CycloElem::zeta_power(5, 0).is_one());
    CHECK(CycloElem::zeta_power(4, 1).lift() == upoly({0, 1}));
    CHECK(CycloElem::zeta_power(3, 2).lift() == upoly({-1, -1}));
    CHECK(CycloElem::zeta_power(7, 9) == CycloElem::zeta_power(7, 2));
    CHECK(CycloElem::zeta_power(7, -1) == CycloElem::zeta_power(7, 6));

    for (long n = 2; n <= 60; ++n) {
        CHECK(CycloElem::zeta_power(n, 1).pow(n).is_one());
        CycloElem sum(n);
        for (long k = 0; k < n; ++k) sum += CycloElem::zeta_power(n, k);
        CHECK(sum.is_zero());
    }
}

TEST_CASE("product of (1 - zeta^j) equals n") {
    for (long n = 2; n <= 40; ++n) {
        CycloElem prod = CycloElem::from_rational(n, Rational(1));
        const CycloElem one = CycloElem::from_rational(n, Rational(1));
        for (long j = 1; j <= n - 1; ++j) prod = prod * (one - CycloElem::zeta_power(n, j));
        CHECK(prod.as_rational() == Rational(n));
    }
}

TEST_CASE("cyclotomic field arithmetic") {
    const CycloElem one2 = CycloElem::from_rational(2, Rational(1));
    CHECK((one2 - CycloElem::zeta_power(2, 1)).inverse().as_rational() == Rational(1, 2));

    const CycloElem one3 = CycloElem::from_rational(3, Rational(1));
    CycloElem a = one3 - CycloElem::zeta_power(3, 1);
    CycloElem b = one3 - CycloElem::zeta_power(3, 2);
    CHECK((a * b).as_rational() == Rational(3));
    CHECK((a.inverse() + b.inverse()).as_rational() == Rational(1));

    CHECK_THROWS_AS(CycloElem(5).inverse(), std::domain_error);
    CHECK_THROWS_AS(CycloElem::zeta_power(5, 1).as_rational(), qmzeta::NonRationalError);
    CHECK(CycloElem::zeta_power(5, 1).pow(-2) == CycloElem::zeta_power(5, 3));

    std::mt19937 rng(41);
    std::uniform_int_distribution<long> num(-5, 5);
    for (int rep = 0; rep < 20; ++rep) {
        const long n = 12;
        std::vector<Rational> cs(static_cast<size_t>(qmzeta::euler_phi(n)));
        bool nonzero = false;
        for (auto& c : cs) {
            c = Rational(num(rng));
            nonzero = nonzero || !c.is_zero();
        }
        if (!nonzero) cs[0] = Rational(1);
        CycloElem e = CycloElem::from_poly(n, qmztest::upolyq(cs));
        CHECK((e * e.inverse()).is_one());
    }
}

TEST_CASE("reduction respects the minimal polynomial") {
    // zeta_4^2 = -1, zeta_6 satisfies z^2 = z - 1
    CHECK(CycloElem::zeta_power(4, 1).pow(2) == CycloElem::from_rational(4, Rational(-1)));
    CycloElem z6 = CycloElem::zeta_power(6, 1);
    CHECK(z6 * z6 == z6 - CycloElem::from_rational(6, Rational(1)));
    CHECK(CycloElem::from_poly(3, upoly({0, 0, 1})) == CycloElem::zeta_power(3, 2));
    CHECK_THROWS_AS((void)(CycloElem(3) + CycloElem(5)), std::invalid_argument);
}

TEST_CASE("concurrent cyclotomic cache fill") {
    std::vector<std::thread> workers;
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([t] {
            for (long n = 61 + t; n <= 105; n += 3) {
                const UniPoly& phi = qmzeta::cyclotomic_poly(n);
                if (phi.degree() != qmzeta::euler_phi(n)) std::abort();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (long n = 61; n <= 105; ++n)
        CHECK(qmzeta::cyclotomic_poly(n).degree() == qmzeta::euler_phi(n));
}
