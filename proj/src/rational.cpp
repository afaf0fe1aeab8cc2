#include "qmzeta/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace qmzeta {

namespace {

void require_nonzero_den(const mpz_class& den) {
    if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den == 0 ? 1 : den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, [&] {
    require_nonzero_den(den);
    return den;
}()) {
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    mpq_t raw;
    mpq_init(raw);
    if (mpq_set_str(raw, std::string(text).c_str(), 10) != 0) {
        mpq_clear(raw);
        throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
    }
    mpq_class v(raw);
    mpq_clear(raw);
    require_nonzero_den(v.get_den());
    v.canonicalize();
    Rational r;
    r.v_ = v;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (e < 0) return inverse().pow(-e);
    Rational r;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    r.v_ = mpq_class(num, den);  // powers of a canonical fraction stay canonical
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Rational binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return {b, mpz_class(1)};
}

Rational factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative n");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return {f, mpz_class(1)};
}

}  // namespace qmzeta
