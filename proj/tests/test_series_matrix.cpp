#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qmzeta/ring_matrix.hpp"
#include "qmzeta/trunc_series.hpp"
#include "test_util.hpp"

using qmzeta::Rational;
using qmzeta::RingMatrix;
using qmzeta::TruncSeries;
using qmzeta::UniPoly;
using qmztest::upoly;

TEST_CASE("series truncation and arithmetic") {
    TruncSeries a(upoly({1, 2, 3, 4, 5}), 3);
    CHECK(a.poly() == upoly({1, 2, 3}));
    CHECK(a.order() == 3);
    CHECK(a.coeff(2) == Rational(3));
    CHECK(a.coeff(5) == Rational(0));

    TruncSeries b(upoly({0, 1}), 3);
    CHECK((a * b).poly() == upoly({0, 1, 2}));
    CHECK((a + b).poly() == upoly({1, 3, 3}));
    CHECK((a - a).is_zero());
    CHECK(Rational(2) * b == TruncSeries(upoly({0, 2}), 3));

    TruncSeries other_order(upoly({1}), 4);
    CHECK_THROWS_AS((void)(a + other_order), std::invalid_argument);
    CHECK_THROWS_AS((void)(a * other_order), std::invalid_argument);
    CHECK_THROWS_AS((void)(a == other_order), std::invalid_argument);
}

TEST_CASE("series inversion") {
    TruncSeries one_minus_x(upoly({1, -1}), 4);
    CHECK(one_minus_x.inverse().poly() == upoly({1, 1, 1, 1}));

    CHECK(TruncSeries::one(6).inverse() == TruncSeries::one(6));

    TruncSeries sq(upoly({1, -2, 1}), 3);
    CHECK(sq.inverse().poly() == upoly({1, 2, 3}));

    CHECK_THROWS_AS(TruncSeries(upoly({0, 1}), 3).inverse(), std::domain_error);

    std::mt19937 rng(5);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    for (int i = 0; i < 30; ++i) {
        std::vector<Rational> cs(6);
        for (auto& c : cs) c = Rational(num(rng), den(rng));
        if (cs[0].is_zero()) cs[0] = Rational(1);
        TruncSeries d(qmztest::upolyq(cs), 6);
        CHECK(d * d.inverse() == TruncSeries::one(6));
    }
}

TEST_CASE("truncation commutes with polynomial arithmetic") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<long> num(-9, 9);
    for (int i = 0; i < 30; ++i) {
        std::vector<Rational> ac(7), bc(7);
        for (auto& c : ac) c = Rational(num(rng));
        for (auto& c : bc) c = Rational(num(rng));
        UniPoly a = qmztest::upolyq(ac), b = qmztest::upolyq(bc);
        const long t = 5;
        CHECK(TruncSeries(a, t) * TruncSeries(b, t) == TruncSeries(a * b, t));
        CHECK(TruncSeries(a, t) + TruncSeries(b, t) == TruncSeries(a + b, t));
    }
}

namespace {

Rational cofactor_det(const RingMatrix<Rational>& m) {
    std::function<Rational(std::vector<long>, std::vector<long>)> go =
        [&](std::vector<long> rows, std::vector<long> cols) -> Rational {
        if (rows.size() == 1) return m.at(rows[0], cols[0]);
        Rational acc(0);
        std::vector<long> sub_rows(rows.begin() + 1, rows.end());
        for (size_t j = 0; j < cols.size(); ++j) {
            std::vector<long> sub_cols;
            for (size_t t = 0; t < cols.size(); ++t)
                if (t != j) sub_cols.push_back(cols[t]);
            Rational term = m.at(rows[0], cols[j]) * go(sub_rows, sub_cols);
            acc += (j % 2 == 0) ? term : -term;
        }
        return acc;
    };
    std::vector<long> idx;
    for (long i = 0; i < m.dim(); ++i) idx.push_back(i);
    return go(idx, idx);
}

}  // namespace

TEST_CASE("matrix determinant and characteristic polynomial") {
    RingMatrix<Rational> m(2, Rational(0));
    m.at(0, 0) = Rational(1);
    m.at(0, 1) = Rational(2);
    m.at(1, 0) = Rational(3);
    m.at(1, 1) = Rational(4);
    auto c = qmzeta::char_poly_fl(m);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Rational(1));
    CHECK(c[1] == Rational(-5));
    CHECK(c[2] == Rational(-2));
    CHECK(qmzeta::det_fl(m) == Rational(-2));

    CHECK(qmzeta::det_fl(RingMatrix<Rational>::identity(3, Rational(0))) == Rational(1));

    RingMatrix<Rational> t(3, Rational(0));
    t.at(0, 0) = Rational(2);
    t.at(0, 2) = Rational(1);
    t.at(1, 0) = Rational(1);
    t.at(1, 1) = Rational(1);
    t.at(2, 1) = Rational(3);
    t.at(2, 2) = Rational(1);
    CHECK(qmzeta::det_fl(t) == Rational(5));

    std::mt19937 rng(13);
    std::uniform_int_distribution<long> num(-6, 6);
    for (long dim = 1; dim <= 4; ++dim) {
        for (int rep = 0; rep < 10; ++rep) {
            RingMatrix<Rational> r(dim, Rational(0));
            for (long i = 0; i < dim; ++i)
                for (long j = 0; j < dim; ++j) r.at(i, j) = Rational(num(rng));
            CHECK(qmzeta::det_fl(r) == cofactor_det(r));
        }
    }
}

TEST_CASE("matrix powers") {
    auto id = RingMatrix<Rational>::identity(3, Rational(0));
    CHECK(id.pow(0) == id);
    CHECK(id.pow(7) == id);

    std::mt19937 rng(17);
    std::uniform_int_distribution<long> num(-4, 4);
    RingMatrix<Rational> m(3, Rational(0));
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j) m.at(i, j) = Rational(num(rng));
    CHECK(m.pow(5) == m.pow(2) * m.pow(3));
    CHECK(m.pow(1) == m);
}

TEST_CASE("companion matrices over truncated series") {
    // 1x1 companion of the monic form of (1-Y) - X: the matrix [1 - X]
    const long order = 5;
    RingMatrix<TruncSeries> c1(1, TruncSeries::zero(order));
    c1.at(0, 0) = TruncSeries(upoly({1, -1}), order);
    RingMatrix<TruncSeries> p = c1.pow(4);
    CHECK(p.at(0, 0).poly() == upoly({1, -1}) * upoly({1, -1}) * upoly({1, -1}) * upoly({1, -1}));

    // det(I - C^4) for s = 1 equals 1 - (1-X)^4 = 4X - 6X^2 + 4X^3 - X^4
    auto diff = RingMatrix<TruncSeries>::identity(1, TruncSeries::zero(order)) - p;
    CHECK(qmzeta::det_fl(diff).poly() == upoly({0, 4, -6, 4, -1}));

    // 2x2 companion of Y^2 - 2Y + (1 - X), the monic form of (1-Y)^2 - X
    RingMatrix<TruncSeries> c2(2, TruncSeries::zero(order));
    c2.at(0, 1) = -TruncSeries(upoly({1, -1}), order);
    c2.at(1, 0) = TruncSeries::one(order);
    c2.at(1, 1) = TruncSeries(upoly({2}), order);
    CHECK(c2.pow(3) == c2 * c2 * c2);

    // trace of the characteristic polynomial route stays exact over series
    auto cp = qmzeta::char_poly_fl(c2);
    REQUIRE(cp.size() == 3);
    CHECK(cp[1] == -TruncSeries(upoly({2}), order));       // -tr(C)
    CHECK(cp[2] == TruncSeries(upoly({1, -1}), order));    // det(C) = 1 - X
}
