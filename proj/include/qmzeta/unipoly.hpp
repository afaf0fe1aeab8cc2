#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmzeta/rational.hpp"

namespace qmzeta {

/// Dense univariate polynomial over the rationals. Coefficients are stored in
/// ascending degree order with no trailing zeros; the zero polynomial has an
/// empty coefficient vector and degree -1.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(Rational constant);
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly monomial(long deg, Rational c = Rational(1));
    static UniPoly x() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    /// Coefficient of X^i; zero beyond the degree.
    const Rational& coeff(long i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Leading coefficient; requires a nonzero polynomial.
    const Rational& leading() const;

    UniPoly zero_like() const { return UniPoly(); }
    UniPoly one_like() const { return UniPoly(Rational(1)); }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& c, const UniPoly& p);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly pow(long e) const;

    /// Scales so the leading coefficient is 1. Zero stays zero.
    UniPoly monic() const;

    Rational eval(const Rational& x) const;

    /// Multiplies by X^k (k >= 0).
    UniPoly shifted(long k) const;

    /// Drops all terms of degree >= order (order >= 0).
    UniPoly truncated(long order) const;

    /// Human-readable form, highest degree first, e.g. "X^2 - 1/3*X + 2".
    std::string to_string(std::string_view var = "X") const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Requires b != 0.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);

struct ExtGcdResult {
    UniPoly g;  // monic gcd (zero iff both inputs are zero... which is rejected)
    UniPoly u;
    UniPoly v;  // u*a + v*b = g
};

/// Extended Euclid over Q[X]. Requires at least one nonzero input; the
/// returned gcd is monic.
ExtGcdResult ext_gcd(const UniPoly& a, const UniPoly& b);

}  // namespace qmzeta
