#pragma once

#include <string>
#include <vector>

#include "qmzeta/errors.hpp"
#include "qmzeta/unipoly.hpp"

namespace qmzeta {

long euler_phi(long n);

/// n-th cyclotomic polynomial, monic over Z. Memoized and thread-safe; the
/// returned reference stays valid for the lifetime of the process.
const UniPoly& cyclotomic_poly(long n);

/// Element of the cyclotomic field Q(zeta_n), stored as a coefficient vector
/// of length phi(n) over the power basis 1, z, ..., z^(phi(n)-1) where z is
/// the primitive n-th root of unity exp(2*pi*i/n) (any primitive root works;
/// the arithmetic only uses the minimal polynomial).
class CycloElem {
  public:
    /// Zero element of Q(zeta_n).
    explicit CycloElem(long n);

    static CycloElem from_rational(long n, const Rational& c);
    /// zeta_n^k for any integer k (negative allowed).
    static CycloElem zeta_power(long n, long k = 1);
    /// Reduces an arbitrary polynomial in z modulo the n-th cyclotomic polynomial.
    static CycloElem from_poly(long n, const UniPoly& p);

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    /// The value as a Rational when the element lies in Q; otherwise throws
    /// NonRationalError naming the offending coefficients.
    Rational as_rational() const;

    /// Field inverse via the extended Euclidean algorithm against the
    /// cyclotomic polynomial. Throws std::domain_error on zero.
    CycloElem inverse() const;

    /// Integer power; negative exponents invert first.
    CycloElem pow(long e) const;

    CycloElem zero_like() const { return CycloElem(n_); }
    CycloElem one_like() const { return from_rational(n_, Rational(1)); }

    CycloElem operator-() const;
    CycloElem& operator+=(const CycloElem& o);
    CycloElem& operator-=(const CycloElem& o);
    friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
    friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator*(const Rational& c, const CycloElem& e);
    friend bool operator==(const CycloElem& a, const CycloElem& b);
    friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

    /// Representative polynomial in z (degree < phi(n)).
    UniPoly lift() const;

    std::string to_string() const;

  private:
    void check_same_field(const CycloElem& o) const;
    long n_;
    std::vector<Rational> coeffs_;  // fixed length phi(n)
};

}  // namespace qmzeta
