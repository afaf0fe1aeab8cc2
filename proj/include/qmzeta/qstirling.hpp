#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "qmzeta/cyclotomic.hpp"
#include "qmzeta/errors.hpp"
#include "qmzeta/rational.hpp"

namespace qmzeta {

enum class StirlingKind { First, Second };

template <class F>
class QContext;

/// Triangle of q-generalized (r,s)-Stirling numbers of one kind, grown row by
/// row on demand from the two-term recurrence. Rows are anchored at the
/// defining expansions: the entry (r, r) is 1, entries with n < r vanish
/// except (0, 0) = 1, and entries with k < r or k > n vanish. The stated
/// boundary conventions in the source recurrences are mutually inconsistent;
/// these anchors are the unique choice under which the defining expansions,
/// the recurrences, and the explicit summation formulas all agree.
template <class F>
class StirlingTable {
  public:
    StirlingTable(StirlingKind kind, long r, long s) : kind_(kind), r_(r), s_(s) {
        if (r < 1) throw std::invalid_argument("StirlingTable: r must be >= 1");
    }

    StirlingKind kind() const { return kind_; }
    long r() const { return r_; }
    long level() const { return s_; }

    /// Entry (n, k); values are returned by copy because the backing rows may
    /// be reallocated by concurrent growth. A cell whose recurrence weight
    /// hits a zero q-number raised to a negative level is stored as
    /// undefined; requesting such a cell throws ZeroQNumberError (cells that
    /// never depend on the degenerate column stay fully usable).
    F value(QContext<F>& ctx, long n, long k) {
        if (n < 0 || k < 0) throw std::invalid_argument("StirlingTable: negative index");
        if (n < r_) return (n == 0 && k == 0) ? ctx.one() : ctx.zero();
        if (k < r_ || k > n) return ctx.zero();
        std::lock_guard<std::mutex> lock(mu_);
        ensure_rows(ctx, n);
        const auto& cell = rows_[static_cast<size_t>(n - r_)][static_cast<size_t>(k - r_)];
        if (!cell)
            throw ZeroQNumberError("stirling entry (" + std::to_string(n) + ", " +
                                   std::to_string(k) + ") hits a zero q-number at level " +
                                   std::to_string(s_));
        return *cell;
    }

  private:
    using Cell = std::optional<F>;

    void ensure_rows(QContext<F>& ctx, long n) {
        if (rows_.empty()) rows_.push_back({Cell(ctx.one())});  // row n = r: single entry at k = r
        while (static_cast<long>(rows_.size()) <= n - r_) {
            const long n_cur = r_ + static_cast<long>(rows_.size());
            const auto& prev = rows_.back();
            auto at_prev = [&](long k) -> Cell {
                if (k < r_ || k > n_cur - 1) return Cell(ctx.zero());
                return prev[static_cast<size_t>(k - r_)];
            };
            auto weight_for = [&](long k) -> Cell {
                try {
                    return Cell(ctx.qnum_pow(kind_ == StirlingKind::First ? n_cur - 1 : k, s_));
                } catch (const ZeroQNumberError&) {
                    return std::nullopt;
                }
            };
            Cell row_factor;  // only used by the first kind
            if (kind_ == StirlingKind::First) row_factor = weight_for(0);
            std::vector<Cell> row;
            row.reserve(static_cast<size_t>(n_cur - r_) + 1);
            for (long k = r_; k <= n_cur; ++k) {
                Cell left = at_prev(k - 1);
                Cell up = at_prev(k);
                Cell weighted;
                if (up && up->is_zero()) {
                    weighted = Cell(ctx.zero());  // weight is irrelevant, keep the cell defined
                } else {
                    Cell w = (kind_ == StirlingKind::First) ? row_factor : weight_for(k);
                    if (w && up) weighted = Cell(*w * *up);
                }
                if (left && weighted)
                    row.push_back(Cell(*left + *weighted));
                else
                    row.push_back(std::nullopt);
            }
            rows_.push_back(std::move(row));
        }
    }

    StirlingKind kind_;
    long r_;
    long s_;
    std::vector<std::vector<Cell>> rows_;
    std::mutex mu_;
};

/// Evaluation context for a fixed base q in a field F (Rational for generic
/// q, CycloElem for roots of unity). Caches q-powers, q-integers [k]_q =
/// 1 + q + ... + q^(k-1), their integer powers, and the Stirling triangles
/// built over them. All caches are grow-only and thread-safe.
template <class F>
class QContext {
  public:
    explicit QContext(F q)
        : q_(std::move(q)), zero_(q_.zero_like()), one_(q_.one_like()) {
        qpow_.push_back(one_);
        qnum_.push_back(zero_);
    }

    QContext(const QContext&) = delete;
    QContext& operator=(const QContext&) = delete;

    const F& q() const { return q_; }
    const F& zero() const { return zero_; }
    const F& one() const { return one_; }

    /// q^k for k >= 0.
    F qpow(long k) {
        if (k < 0) throw std::invalid_argument("QContext::qpow: negative exponent");
        std::lock_guard<std::mutex> lock(num_mu_);
        grow(k);
        return qpow_[static_cast<size_t>(k)];
    }

    /// [k]_q as a geometric sum; [k]_1 = k falls out of the same code path.
    F qnum(long k) {
        if (k < 0) throw std::invalid_argument("QContext::qnum: negative index");
        std::lock_guard<std::mutex> lock(num_mu_);
        grow(k);
        return qnum_[static_cast<size_t>(k)];
    }

    /// ([k]_q)^s for any integer s. Throws ZeroQNumberError when s < 0 and
    /// [k]_q = 0 (e.g. n | k at a primitive n-th root of unity).
    F qnum_pow(long k, long s) {
        if (k < 0) throw std::invalid_argument("QContext::qnum_pow: negative index");
        if (s == 0) return one_;
        std::lock_guard<std::mutex> lock(num_mu_);
        auto it = powcache_.find({k, s});
        if (it != powcache_.end()) return it->second;
        grow(k);
        const F& base = qnum_[static_cast<size_t>(k)];
        if (s < 0 && base.is_zero())
            throw ZeroQNumberError("qnum_pow: [" + std::to_string(k) +
                                   "]_q = 0 raised to negative power " + std::to_string(s));
        F value = base.pow(s);
        return powcache_.emplace(std::make_pair(k, s), std::move(value)).first->second;
    }

    /// Shared Stirling triangle for (kind, r, s) over this q.
    StirlingTable<F>& stirling(StirlingKind kind, long r, long s) {
        std::lock_guard<std::mutex> lock(tab_mu_);
        auto key = std::make_tuple(kind == StirlingKind::First ? 0 : 1, r, s);
        auto it = tables_.find(key);
        if (it == tables_.end())
            it = tables_.emplace(key, std::make_unique<StirlingTable<F>>(kind, r, s)).first;
        return *it->second;
    }

  private:
    void grow(long k) {
        while (static_cast<long>(qpow_.size()) <= k) {
            qpow_.push_back(qpow_.back() * q_);
            qnum_.push_back(qnum_.back() + qpow_[qnum_.size() - 1]);
        }
    }

    F q_, zero_, one_;
    std::vector<F> qpow_, qnum_;
    std::map<std::pair<long, long>, F> powcache_;
    std::map<std::tuple<int, long, long>, std::unique_ptr<StirlingTable<F>>> tables_;
    std::mutex num_mu_, tab_mu_;
};

/// q-generalized (r,s)-Stirling number of the first kind, entry (n, k).
template <class F>
F stirling1(QContext<F>& ctx, long n, long k, long r, long s) {
    return ctx.stirling(StirlingKind::First, r, s).value(ctx, n, k);
}

/// q-generalized (r,s)-Stirling number of the second kind, entry (n, k).
template <class F>
F stirling2(QContext<F>& ctx, long n, long k, long r, long s) {
    return ctx.stirling(StirlingKind::Second, r, s).value(ctx, n, k);
}

/// First kind, entry (n, m), as the literal scaled sum over strict index
/// tuples r <= i_1 < ... < i_(m-r) <= n-1 of 1/([i_1]...[i_(m-r)])^s with
/// prefactor ([r]...[n-1])^s. Requires r <= m <= n-1. Throws
/// ZeroQNumberError if any [i]_q in range vanishes and s > 0 (the display is
/// genuinely undefined there).
template <class F>
F stirling1_direct(QContext<F>& ctx, long n, long m, long r, long s) {
    if (r < 1 || m < r || m > n - 1)
        throw std::invalid_argument("stirling1_direct: need 1 <= r <= m <= n-1");
    F prefactor = ctx.one();
    for (long i = r; i <= n - 1; ++i) prefactor = prefactor * ctx.qnum_pow(i, s);
    std::function<F(long, long)> subset_sum = [&](long start, long remaining) -> F {
        if (remaining == 0) return ctx.one();
        F acc = ctx.zero();
        for (long i = start; i + remaining - 1 <= n - 1; ++i)
            acc += ctx.qnum_pow(i, -s) * subset_sum(i + 1, remaining - 1);
        return acc;
    };
    return prefactor * subset_sum(r, m - r);
}

/// First kind, complementary entry (n, n-m), as the strict sum over
/// r <= i_1 < ... < i_m <= n-1 of ([i_1]...[i_m])^s. Requires n-m >= r.
template <class F>
F stirling1_comp_strict(QContext<F>& ctx, long n, long m, long r, long s) {
    if (r < 1 || m < 0 || n - m < r)
        throw std::invalid_argument("stirling1_comp_strict: need r >= 1, 0 <= m <= n-r");
    std::function<F(long, long)> subset_sum = [&](long start, long remaining) -> F {
        if (remaining == 0) return ctx.one();
        F acc = ctx.zero();
        for (long i = start; i + remaining - 1 <= n - 1; ++i)
            acc += ctx.qnum_pow(i, s) * subset_sum(i + 1, remaining - 1);
        return acc;
    };
    return subset_sum(r, m);
}

/// First kind, complementary entry (n, n-m), as the weak shifted sum over
/// r <= i_1 <= ... <= i_m <= n-m of ([i_1][i_2+1]...[i_m+m-1])^s.
template <class F>
F stirling1_comp_weak(QContext<F>& ctx, long n, long m, long r, long s) {
    if (r < 1 || m < 0 || n - m < r)
        throw std::invalid_argument("stirling1_comp_weak: need r >= 1, 0 <= m <= n-r");
    std::function<F(long, long)> weak_sum = [&](long lo, long pos) -> F {
        if (pos == m) return ctx.one();
        F acc = ctx.zero();
        for (long i = lo; i <= n - m; ++i)
            acc += ctx.qnum_pow(i + pos, s) * weak_sum(i, pos + 1);
        return acc;
    };
    return weak_sum(r, 0);
}

/// Second kind, entry (n, k), as the literal nested sum with gap exponents
/// over bases [r], [r+1], ..., [k]. Requires r <= k <= n; the nested display
/// covers k >= r+1 and the single-column case k = r is ([r]_q)^((n-r)s).
template <class F>
F stirling2_direct(QContext<F>& ctx, long n, long k, long r, long s) {
    if (r < 1 || k < r || k > n)
        throw std::invalid_argument("stirling2_direct: need 1 <= r <= k <= n");
    if (k == r) return ctx.qnum_pow(r, (n - r) * s);
    // rec(t, v) = sum_{i_t = 0}^{v} ([r+t]_q)^((v - i_t) s) * rec(t-1, i_t),
    // rec(0, v) = ([r]_q)^(v s)
    std::function<F(long, long)> rec = [&](long t, long v) -> F {
        if (t == 0) return ctx.qnum_pow(r, v * s);
        F acc = ctx.zero();
        for (long i = 0; i <= v; ++i)
            acc += ctx.qnum_pow(r + t, (v - i) * s) * rec(t - 1, i);
        return acc;
    };
    const long d = k - r;
    F total = ctx.zero();
    for (long i = 0; i <= n - k; ++i)
        total += ctx.qnum_pow(k, (n - k - i) * s) * rec(d - 1, i);
    return total;
}

/// Second kind, complementary entry (n, n-k), as the weak sum over
/// r <= i_1 <= ... <= i_k <= n-k of ([i_1]...[i_k])^s. Requires n-k >= r.
template <class F>
F stirling2_comp_weak(QContext<F>& ctx, long n, long k, long r, long s) {
    if (r < 1 || k < 0 || n - k < r)
        throw std::invalid_argument("stirling2_comp_weak: need r >= 1, 0 <= k <= n-r");
    std::function<F(long, long)> weak_sum = [&](long lo, long remaining) -> F {
        if (remaining == 0) return ctx.one();
        F acc = ctx.zero();
        for (long i = lo; i <= n - k; ++i)
            acc += ctx.qnum_pow(i, s) * weak_sum(i, remaining - 1);
        return acc;
    };
    return weak_sum(r, k);
}

/// Shared context for a generic rational q, keyed by value.
std::shared_ptr<QContext<Rational>> rational_context(const Rational& q);

/// Shared context for q = zeta_n^a with gcd(a, n) = 1 (a primitive n-th root
/// of unity).
std::shared_ptr<QContext<CycloElem>> root_context(long n, long exponent = 1);

/// Unsigned r-Stirling number of the first kind (classical limit q = 1,
/// level s = 1).
Rational r_stirling1_q1(long n, long k, long r);

}  // namespace qmzeta
