#pragma once

#include <stdexcept>
#include <vector>

#include "qmzeta/rational.hpp"

namespace qmzeta {

/// Square matrix over a commutative ring R. R must provide zero_like(),
/// one_like(), +, -, *, and multiplication by Rational for the
/// characteristic-polynomial routine.
template <class R>
class RingMatrix {
  public:
    RingMatrix(long dim, const R& fill) : dim_(dim), cells_(check_dim(dim) * dim, fill) {}

    static RingMatrix identity(long dim, const R& proto) {
        RingMatrix m(dim, proto.zero_like());
        const R one = proto.one_like();
        for (long i = 0; i < dim; ++i) m.at(i, i) = one;
        return m;
    }

    long dim() const { return dim_; }

    R& at(long i, long j) { return cells_[index(i, j)]; }
    const R& at(long i, long j) const { return cells_[index(i, j)]; }

    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("RingMatrix: dimension mismatch");
        RingMatrix out(a.dim_, a.at(0, 0).zero_like());
        for (long i = 0; i < a.dim_; ++i) {
            for (long k = 0; k < a.dim_; ++k) {
                const R& aik = a.at(i, k);
                for (long j = 0; j < a.dim_; ++j) out.at(i, j) += aik * b.at(k, j);
            }
        }
        return out;
    }

    friend RingMatrix operator+(RingMatrix a, const RingMatrix& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("RingMatrix: dimension mismatch");
        for (size_t i = 0; i < a.cells_.size(); ++i) a.cells_[i] += b.cells_[i];
        return a;
    }

    friend RingMatrix operator-(RingMatrix a, const RingMatrix& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("RingMatrix: dimension mismatch");
        for (size_t i = 0; i < a.cells_.size(); ++i) a.cells_[i] -= b.cells_[i];
        return a;
    }

    friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
        return a.dim_ == b.dim_ && a.cells_ == b.cells_;
    }

    /// Binary exponentiation; e = 0 yields the identity.
    RingMatrix pow(unsigned long e) const {
        RingMatrix result = identity(dim_, at(0, 0));
        RingMatrix base = *this;
        while (e > 0) {
            if (e & 1UL) result = result * base;
            if ((e >>= 1) > 0) base = base * base;
        }
        return result;
    }

    R trace() const {
        R t = at(0, 0).zero_like();
        for (long i = 0; i < dim_; ++i) t += at(i, i);
        return t;
    }

    void add_to_diagonal(const R& c) {
        for (long i = 0; i < dim_; ++i) at(i, i) += c;
    }

  private:
    static long check_dim(long dim) {
        if (dim < 1) throw std::invalid_argument("RingMatrix: dimension must be >= 1");
        return dim;
    }
    size_t index(long i, long j) const {
        if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
            throw std::out_of_range("RingMatrix: index out of range");
        return static_cast<size_t>(i) * static_cast<size_t>(dim_) + static_cast<size_t>(j);
    }

    long dim_;
    std::vector<R> cells_;
};

/// Characteristic polynomial det(lambda*I - M) = lambda^d + c[1]*lambda^(d-1)
/// + ... + c[d], computed division-free in R by the Faddeev-LeVerrier
/// recursion (the only divisions are by the integers 2..d). Returns the
/// coefficient list c with c[0] = one.
template <class R>
std::vector<R> char_poly_fl(const RingMatrix<R>& m) {
    const long d = m.dim();
    const R zero = m.at(0, 0).zero_like();
    std::vector<R> c;
    c.reserve(static_cast<size_t>(d) + 1);
    c.push_back(zero.one_like());
    RingMatrix<R> a = m;
    for (long k = 1; k <= d; ++k) {
        if (k > 1) {
            a.add_to_diagonal(c.back());
            a = m * a;
        }
        R t = a.trace();
        c.push_back(-(Rational(1, k) * t));
    }
    return c;
}

/// Determinant via char_poly_fl: det(M) = (-1)^d * c[d].
template <class R>
R det_fl(const RingMatrix<R>& m) {
    std::vector<R> c = char_poly_fl(m);
    R last = c.back();
    return (m.dim() % 2 == 0) ? last : -last;
}

}  // namespace qmzeta
