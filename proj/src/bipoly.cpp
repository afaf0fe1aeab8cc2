#include "qmzeta/bipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qmzeta {

namespace {
const Rational kZero(0);
}

BiPoly BiPoly::constant(const Rational& c) {
    BiPoly p;
    if (!c.is_zero()) p.grid_ = {{c}};
    return p;
}

BiPoly BiPoly::x() {
    BiPoly p;
    p.grid_ = {{Rational(0)}, {Rational(1)}};
    return p;
}

BiPoly BiPoly::y() {
    BiPoly p;
    p.grid_ = {{Rational(0), Rational(1)}};
    return p;
}

BiPoly BiPoly::from_y_coeffs(const std::vector<UniPoly>& cs) {
    BiPoly p;
    long x_deg = -1;
    for (const auto& c : cs) x_deg = std::max(x_deg, c.degree());
    if (x_deg < 0) return p;
    p.grid_.assign(static_cast<size_t>(x_deg) + 1,
                   std::vector<Rational>(cs.size(), Rational(0)));
    for (size_t j = 0; j < cs.size(); ++j)
        for (long i = 0; i <= cs[j].degree(); ++i)
            p.grid_[static_cast<size_t>(i)][j] = cs[j].coeff(i);
    p.trim();
    return p;
}

long BiPoly::y_degree() const {
    if (grid_.empty()) return -1;
    return static_cast<long>(grid_[0].size()) - 1;
}

const Rational& BiPoly::coeff(long i, long j) const {
    if (i < 0 || j < 0 || i >= static_cast<long>(grid_.size()) ||
        j >= static_cast<long>(grid_[0].size()))
        return kZero;
    return grid_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

void BiPoly::trim() {
    // drop all-zero trailing columns, then rows; keep the grid rectangular
    size_t cols = grid_.empty() ? 0 : grid_[0].size();
    while (cols > 0) {
        bool all_zero = true;
        for (const auto& row : grid_)
            if (!row[cols - 1].is_zero()) { all_zero = false; break; }
        if (!all_zero) break;
        --cols;
    }
    for (auto& row : grid_) row.resize(cols);
    while (!grid_.empty()) {
        bool all_zero = true;
        for (const auto& c : grid_.back())
            if (!c.is_zero()) { all_zero = false; break; }
        if (!all_zero) break;
        grid_.pop_back();
    }
    if (!grid_.empty() && cols == 0) grid_.clear();
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& row : r.grid_)
        for (auto& c : row) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    const size_t rows = std::max(grid_.size(), o.grid_.size());
    const size_t cols = std::max(grid_.empty() ? 0 : grid_[0].size(),
                                 o.grid_.empty() ? 0 : o.grid_[0].size());
    grid_.resize(rows);
    for (auto& row : grid_) row.resize(cols, Rational(0));
    for (size_t i = 0; i < o.grid_.size(); ++i)
        for (size_t j = 0; j < o.grid_[i].size(); ++j) grid_[i][j] += o.grid_[i][j];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    return *this += -o;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly();
    const size_t ar = a.grid_.size(), ac = a.grid_[0].size();
    const size_t br = b.grid_.size(), bc = b.grid_[0].size();
    BiPoly out;
    out.grid_.assign(ar + br - 1, std::vector<Rational>(ac + bc - 1, Rational(0)));
    for (size_t i = 0; i < ar; ++i)
        for (size_t j = 0; j < ac; ++j) {
            if (a.grid_[i][j].is_zero()) continue;
            for (size_t k = 0; k < br; ++k)
                for (size_t l = 0; l < bc; ++l) {
                    if (b.grid_[k][l].is_zero()) continue;
                    out.grid_[i + k][j + l] += a.grid_[i][j] * b.grid_[k][l];
                }
        }
    out.trim();
    return out;
}

BiPoly operator*(const Rational& c, const BiPoly& p) {
    if (c.is_zero()) return BiPoly();
    BiPoly r = p;
    for (auto& row : r.grid_)
        for (auto& x : row) x *= c;
    return r;
}

BiPoly BiPoly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("BiPoly::pow: negative exponent");
    BiPoly result = constant(Rational(1));
    BiPoly base = *this;
    while (e > 0) {
        if (e & 1L) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Rational BiPoly::eval(const Rational& x, const Rational& y) const {
    Rational total(0);
    Rational xp(1);
    for (size_t i = 0; i < grid_.size(); ++i) {
        Rational yp(1);
        for (size_t j = 0; j < grid_[i].size(); ++j) {
            if (!grid_[i][j].is_zero()) total += grid_[i][j] * xp * yp;
            yp *= y;
        }
        xp *= x;
    }
    return total;
}

std::string BiPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long j = 0; j <= y_degree(); ++j) {
        for (long i = 0; i <= x_degree(); ++i) {
            const Rational& c = coeff(i, j);
            if (c.is_zero()) continue;
            Rational abs = c.sign() < 0 ? -c : c;
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            const bool unit = abs.is_one();
            const bool has_var = i > 0 || j > 0;
            if (!has_var || !unit) os << abs.to_string();
            if (has_var && !unit) os << "*";
            if (i > 0) {
                os << "X";
                if (i > 1) os << "^" << i;
                if (j > 0) os << "*";
            }
            if (j > 0) {
                os << "Y";
                if (j > 1) os << "^" << j;
            }
        }
    }
    return os.str();
}

}  // namespace qmzeta
