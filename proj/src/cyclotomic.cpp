#include "qmzeta/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qmzeta {

long euler_phi(long n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

std::map<long, UniPoly>& cyclo_cache() {
    static std::map<long, UniPoly> cache;
    return cache;
}

std::mutex& cyclo_mutex() {
    static std::mutex mu;
    return mu;
}

UniPoly x_pow_minus_one(long n) {
    UniPoly p = UniPoly::monomial(n);
    return p - UniPoly(Rational(1));
}

}  // namespace

const UniPoly& cyclotomic_poly(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be >= 1");
    {
        std::lock_guard<std::mutex> lock(cyclo_mutex());
        auto it = cyclo_cache().find(n);
        if (it != cyclo_cache().end()) return it->second;
    }
    // Phi_n = (X^n - 1) / prod_{d | n, d < n} Phi_d; recursion depth is the
    // divisor chain length, and the lock is never held across recursion.
    UniPoly numerator = x_pow_minus_one(n);
    UniPoly denominator(Rational(1));
    for (long d = 1; d < n; ++d) {
        if (n % d == 0) denominator = denominator * cyclotomic_poly(d);
    }
    auto [q, r] = divrem(numerator, denominator);
    if (!r.is_zero()) throw std::logic_error("cyclotomic_poly: non-exact division");
    std::lock_guard<std::mutex> lock(cyclo_mutex());
    return cyclo_cache().emplace(n, std::move(q)).first->second;
}

CycloElem::CycloElem(long n) : n_(n) {
    if (n < 1) throw std::invalid_argument("CycloElem: n must be >= 1");
    coeffs_.assign(static_cast<size_t>(euler_phi(n)), Rational(0));
}

CycloElem CycloElem::from_rational(long n, const Rational& c) {
    CycloElem e(n);
    e.coeffs_[0] = c;
    return e;
}

CycloElem CycloElem::from_poly(long n, const UniPoly& p) {
    CycloElem e(n);
    auto [q, r] = divrem(p, cyclotomic_poly(n));
    (void)q;
    for (long i = 0; i <= r.degree(); ++i) e.coeffs_[static_cast<size_t>(i)] = r.coeff(i);
    return e;
}

CycloElem CycloElem::zeta_power(long n, long k) {
    long kk = k % n;
    if (kk < 0) kk += n;
    return from_poly(n, UniPoly::monomial(kk));
}

bool CycloElem::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool CycloElem::is_one() const {
    if (!coeffs_[0].is_one()) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

bool CycloElem::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rational CycloElem::as_rational() const {
    if (!is_rational())
        throw NonRationalError("CycloElem: not rational: " + to_string());
    return coeffs_[0];
}

CycloElem CycloElem::inverse() const {
    if (is_zero()) throw std::domain_error("CycloElem: inverse of zero");
    // u*lift + v*Phi_n = 1 in Q[z], so u is the inverse mod Phi_n.
    ExtGcdResult e = ext_gcd(lift(), cyclotomic_poly(n_));
    if (e.g.degree() != 0)
        throw std::logic_error("CycloElem: gcd with cyclotomic polynomial not constant");
    return from_poly(n_, e.u);
}

CycloElem CycloElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloElem result = one_like();
    CycloElem base = *this;
    while (e > 0) {
        if (e & 1L) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

CycloElem CycloElem::operator-() const {
    CycloElem r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

void CycloElem::check_same_field(const CycloElem& o) const {
    if (n_ != o.n_) throw std::invalid_argument("CycloElem: mixed cyclotomic fields");
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
    check_same_field(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
    check_same_field(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    a.check_same_field(b);
    return CycloElem::from_poly(a.n_, a.lift() * b.lift());
}

CycloElem operator*(const Rational& c, const CycloElem& e) {
    CycloElem r = e;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

bool operator==(const CycloElem& a, const CycloElem& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
}

UniPoly CycloElem::lift() const {
    return UniPoly(coeffs_);
}

std::string CycloElem::to_string() const {
    std::ostringstream os;
    os << "(" << lift().to_string("z") << " : n=" << n_ << ")";
    return os.str();
}

}  // namespace qmzeta
