#pragma once

#include <string>

#include "qmzeta/unipoly.hpp"

namespace qmzeta {

/// Truncated power series: an element of Q[X]/(X^T). Arithmetic between two
/// series requires matching truncation orders.
class TruncSeries {
  public:
    TruncSeries(UniPoly p, long order);

    static TruncSeries zero(long order) { return {UniPoly(), order}; }
    static TruncSeries one(long order) { return {UniPoly(Rational(1)), order}; }

    long order() const { return order_; }
    const UniPoly& poly() const { return poly_; }
    const Rational& coeff(long i) const { return poly_.coeff(i); }
    bool is_zero() const { return poly_.is_zero(); }

    TruncSeries zero_like() const { return zero(order_); }
    TruncSeries one_like() const { return one(order_); }

    TruncSeries operator-() const { return {-poly_, order_}; }
    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const Rational& c, const TruncSeries& s);
    friend bool operator==(const TruncSeries& a, const TruncSeries& b);
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    /// Multiplicative inverse mod X^T; requires a nonzero constant term.
    TruncSeries inverse() const;

    std::string to_string(std::string_view var = "X") const;

  private:
    static void check_orders(const TruncSeries& a, const TruncSeries& b);
    UniPoly poly_;
    long order_;
};

}  // namespace qmzeta
