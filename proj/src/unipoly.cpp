#include "qmzeta/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qmzeta {

namespace {
const Rational kZero(0);
}

UniPoly::UniPoly(Rational constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

UniPoly UniPoly::monomial(long deg, Rational c) {
    if (deg < 0) throw std::invalid_argument("UniPoly::monomial: negative degree");
    if (c.is_zero()) return UniPoly();
    std::vector<Rational> cs(static_cast<size_t>(deg) + 1, Rational(0));
    cs.back() = std::move(c);
    UniPoly p;
    p.coeffs_ = std::move(cs);
    return p;
}

const Rational& UniPoly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

const Rational& UniPoly::leading() const {
    if (is_zero()) throw std::domain_error("UniPoly: leading coefficient of zero");
    return coeffs_.back();
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    UniPoly p;
    p.coeffs_ = std::move(out);
    p.trim();  // cross terms cannot cancel the leading one, but stay safe
    return p;
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
    if (c.is_zero()) return UniPoly();
    UniPoly r = p;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

UniPoly UniPoly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("UniPoly::pow: negative exponent");
    UniPoly result = one_like();
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * *this;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::shifted(long k) const {
    if (k < 0) throw std::invalid_argument("UniPoly::shifted: negative shift");
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> cs(static_cast<size_t>(k), Rational(0));
    cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
    UniPoly p;
    p.coeffs_ = std::move(cs);
    return p;
}

UniPoly UniPoly::truncated(long order) const {
    if (order < 0) throw std::invalid_argument("UniPoly::truncated: negative order");
    if (static_cast<long>(coeffs_.size()) <= order) return *this;
    UniPoly p;
    p.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + order);
    p.trim();
    return p;
}

std::string UniPoly::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rational& c = coeff(i);
        if (c.is_zero()) continue;
        Rational abs = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = abs.is_one();
        if (i == 0) {
            os << abs.to_string();
        } else {
            if (!unit) os << abs.to_string() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
    UniPoly q;
    UniPoly r = a;
    const long db = b.degree();
    const Rational lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= db) {
        const long shift = r.degree() - db;
        Rational factor = r.leading() * lead_inv;
        UniPoly term = UniPoly::monomial(shift, factor);
        q += term;
        r -= term * b;
    }
    return {q, r};
}

ExtGcdResult ext_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("ext_gcd: both inputs zero");
    // invariant: r0 = u0*a + v0*b, r1 = u1*a + v1*b
    UniPoly r0 = a, r1 = b;
    UniPoly u0 = UniPoly(Rational(1)), u1;
    UniPoly v0, v1 = UniPoly(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = r1;
        r1 = r;
        UniPoly u2 = u0 - q * u1;
        u0 = u1;
        u1 = u2;
        UniPoly v2 = v0 - q * v1;
        v0 = v1;
        v1 = v2;
    }
    Rational scale = r0.leading().inverse();
    return {scale * r0, scale * u0, scale * v0};
}

}  // namespace qmzeta
