#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace qmzeta {

/// Arbitrary-precision rational number. Always kept canonical: denominator
/// positive, gcd(numerator, denominator) = 1. Backed by GMP.
class Rational {
  public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Parses "p" or "p/q" with optional leading minus. Throws
    /// std::invalid_argument on malformed input or zero denominator.
    static Rational from_string(std::string_view text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Rational inverse() const;

    /// Integer power; negative exponents require a nonzero base.
    Rational pow(long e) const;

    Rational zero_like() const { return Rational(); }
    Rational one_like() const { return Rational(1); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    /// Serializes as "p" for integers, "p/q" otherwise.
    std::string to_string() const;

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// binom(n, k) as a Rational; zero for k < 0 or k > n. Requires n >= 0.
Rational binomial(long n, long k);

/// n! as a Rational. Requires n >= 0.
Rational factorial(long n);

}  // namespace qmzeta
