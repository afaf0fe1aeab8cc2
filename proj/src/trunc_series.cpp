#include "qmzeta/trunc_series.hpp"

#include <sstream>
#include <stdexcept>

namespace qmzeta {

TruncSeries::TruncSeries(UniPoly p, long order) : poly_(std::move(p)), order_(order) {
    if (order < 1) throw std::invalid_argument("TruncSeries: order must be >= 1");
    poly_ = poly_.truncated(order_);
}

void TruncSeries::check_orders(const TruncSeries& a, const TruncSeries& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("TruncSeries: mismatched orders");
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    check_orders(*this, o);
    poly_ += o.poly_;
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    check_orders(*this, o);
    poly_ -= o.poly_;
    return *this;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries::check_orders(a, b);
    return {a.poly_ + b.poly_, a.order_};
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries::check_orders(a, b);
    return {a.poly_ - b.poly_, a.order_};
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries::check_orders(a, b);
    return {a.poly_ * b.poly_, a.order_};
}

TruncSeries operator*(const Rational& c, const TruncSeries& s) {
    return {c * s.poly_, s.order_};
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries::check_orders(a, b);
    return a.poly_ == b.poly_;
}

TruncSeries TruncSeries::inverse() const {
    const Rational& a0 = poly_.coeff(0);
    if (a0.is_zero()) throw std::domain_error("TruncSeries: inverse needs nonzero constant term");
    const Rational a0_inv = a0.inverse();
    std::vector<Rational> b(static_cast<size_t>(order_), Rational(0));
    b[0] = a0_inv;
    for (long k = 1; k < order_; ++k) {
        Rational acc(0);
        for (long i = 1; i <= k; ++i) acc += poly_.coeff(i) * b[static_cast<size_t>(k - i)];
        b[static_cast<size_t>(k)] = -(a0_inv * acc);
    }
    return {UniPoly(std::move(b)), order_};
}

std::string TruncSeries::to_string(std::string_view var) const {
    std::ostringstream os;
    os << poly_.to_string(var) << " + O(" << var << "^" << order_ << ")";
    return os.str();
}

}  // namespace qmzeta
