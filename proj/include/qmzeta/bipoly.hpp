#pragma once

#include <string>
#include <vector>

#include "qmzeta/unipoly.hpp"

namespace qmzeta {

/// Bivariate polynomial over Q in the variables X and Y, stored as a dense
/// coefficient grid c[i][j] for X^i Y^j with no all-zero trailing rows or
/// columns.
class BiPoly {
  public:
    BiPoly() = default;

    static BiPoly constant(const Rational& c);
    static BiPoly x();
    static BiPoly y();
    /// sum_j cs[j](X) * Y^j
    static BiPoly from_y_coeffs(const std::vector<UniPoly>& cs);

    bool is_zero() const { return grid_.empty(); }
    /// Degree in X (-1 for zero).
    long x_degree() const { return static_cast<long>(grid_.size()) - 1; }
    /// Degree in Y (-1 for zero).
    long y_degree() const;

    const Rational& coeff(long i, long j) const;
    const std::vector<std::vector<Rational>>& grid() const { return grid_; }

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const Rational& c, const BiPoly& p);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.grid_ == b.grid_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly pow(long e) const;

    /// Substitutes values for X and Y.
    Rational eval(const Rational& x, const Rational& y) const;

    /// Monomial form, Y-major then X-major, e.g. "1 - 2*Y + Y^2 - X*Y^2".
    std::string to_string() const;

  private:
    void trim();
    std::vector<std::vector<Rational>> grid_;  // grid_[i][j] multiplies X^i Y^j
};

}  // namespace qmzeta
