#include "qmzeta/symfun.hpp"

#include <functional>
#include <stdexcept>

namespace qmzeta {

namespace {

void require_terms(const std::vector<Rational>& xs, long m, const char* who) {
    if (m < 0) throw std::invalid_argument(std::string(who) + ": negative order");
    if (static_cast<long>(xs.size()) < m)
        throw std::invalid_argument(std::string(who) + ": need at least m input terms");
}

/// Visits every partition of m encoded as multiplicities counts[j] of part j,
/// 1 <= j <= m.
void for_each_partition(long m, const std::function<void(const std::vector<long>&)>& visit) {
    std::vector<long> counts(static_cast<size_t>(m) + 1, 0);
    std::function<void(long, long)> rec = [&](long remaining, long max_part) {
        if (remaining == 0) {
            visit(counts);
            return;
        }
        for (long j = std::min(remaining, max_part); j >= 1; --j) {
            ++counts[static_cast<size_t>(j)];
            rec(remaining - j, j);
            --counts[static_cast<size_t>(j)];
        }
    };
    rec(m, m);
}

}  // namespace

Rational hessenberg_det(const std::vector<Rational>& first_col,
                        const std::vector<Rational>& band,
                        const std::vector<Rational>& superdiag) {
    const long dim = static_cast<long>(first_col.size());
    if (dim == 0) return Rational(1);
    if (static_cast<long>(band.size()) < dim - 1 ||
        static_cast<long>(superdiag.size()) < dim - 1)
        throw std::invalid_argument("hessenberg_det: band/superdiag too short");
    // dets[k] = det of the leading k x k block
    std::vector<Rational> dets(static_cast<size_t>(dim) + 1, Rational(0));
    dets[0] = Rational(1);
    dets[1] = first_col[0];
    for (long k = 2; k <= dim; ++k) {
        // expansion along the last row: diagonal term, then walk left
        // accumulating the superdiagonal product and alternating sign
        Rational acc = band[0] * dets[static_cast<size_t>(k - 1)];
        Rational super_prod(1);
        int sign = -1;
        for (long j = k - 1; j >= 1; --j) {
            super_prod *= superdiag[static_cast<size_t>(j - 1)];
            const Rational& entry =
                (j == 1) ? first_col[static_cast<size_t>(k - 1)]
                         : band[static_cast<size_t>(k - j)];
            Rational term = entry * super_prod * dets[static_cast<size_t>(j - 1)];
            acc += (sign < 0) ? -term : term;
            sign = -sign;
        }
        dets[static_cast<size_t>(k)] = acc;
    }
    return dets[static_cast<size_t>(dim)];
}

Rational bell_complete_partition(const std::vector<Rational>& xs, long m) {
    require_terms(xs, m, "bell_complete_partition");
    if (m == 0) return Rational(1);
    Rational total(0);
    for_each_partition(m, [&](const std::vector<long>& counts) {
        Rational term = factorial(m);
        for (long j = 1; j <= m; ++j) {
            const long c = counts[static_cast<size_t>(j)];
            if (c == 0) continue;
            term *= (xs[static_cast<size_t>(j - 1)] / factorial(j)).pow(c);
            term /= factorial(c);
        }
        total += term;
    });
    return total;
}

Rational bell_complete_det(const std::vector<Rational>& xs, long m) {
    require_terms(xs, m, "bell_complete_det");
    if (m == 0) return Rational(1);
    std::vector<Rational> a(static_cast<size_t>(m));
    for (long j = 1; j <= m; ++j)
        a[static_cast<size_t>(j - 1)] = xs[static_cast<size_t>(j - 1)] / factorial(j - 1);
    std::vector<Rational> superdiag(static_cast<size_t>(m - 1));
    for (long i = 1; i <= m - 1; ++i) superdiag[static_cast<size_t>(i - 1)] = Rational(-i);
    return hessenberg_det(a, a, superdiag);
}

Rational bell_complete(const std::vector<Rational>& xs, long m) {
    Rational by_partition = bell_complete_partition(xs, m);
    Rational by_det = bell_complete_det(xs, m);
    if (by_partition != by_det)
        throw std::logic_error("bell_complete: partition sum and determinant disagree");
    return by_partition;
}

Rational h_from_powersums(const std::vector<Rational>& g, long K) {
    require_terms(g, K, "h_from_powersums");
    if (K == 0) return Rational(1);
    std::vector<Rational> xs(static_cast<size_t>(K));
    for (long j = 1; j <= K; ++j)
        xs[static_cast<size_t>(j - 1)] = factorial(j - 1) * g[static_cast<size_t>(j - 1)];
    return bell_complete_det(xs, K) / factorial(K);
}

Rational e_from_powersums(const std::vector<Rational>& g, long K) {
    require_terms(g, K, "e_from_powersums");
    std::vector<Rational> e(static_cast<size_t>(K) + 1, Rational(0));
    e[0] = Rational(1);
    for (long k = 1; k <= K; ++k) {
        Rational acc(0);
        for (long i = 1; i <= k; ++i) {
            Rational term = g[static_cast<size_t>(i - 1)] * e[static_cast<size_t>(k - i)];
            acc += (i % 2 == 1) ? term : -term;
        }
        e[static_cast<size_t>(k)] = acc / Rational(k);
    }
    return e[static_cast<size_t>(K)];
}

Rational powersum_transform(PsumForm form, const std::vector<Rational>& input, long m) {
    require_terms(input, m, "powersum_transform");
    if (m == 0) return form == PsumForm::DetToPowerSums || form == PsumForm::ConvolutionInverse
                           ? Rational(0)
                           : Rational(1);
    switch (form) {
        case PsumForm::PartitionSum: {
            // b_m = sum over partitions of prod_j (a_j / j)^(i_j) / i_j!
            Rational total(0);
            for_each_partition(m, [&](const std::vector<long>& counts) {
                Rational term(1);
                for (long j = 1; j <= m; ++j) {
                    const long c = counts[static_cast<size_t>(j)];
                    if (c == 0) continue;
                    term *= (input[static_cast<size_t>(j - 1)] / Rational(j)).pow(c);
                    term /= factorial(c);
                }
                total += term;
            });
            return total;
        }
        case PsumForm::DetFromPowerSums: {
            std::vector<Rational> superdiag(static_cast<size_t>(m - 1));
            for (long i = 1; i <= m - 1; ++i) superdiag[static_cast<size_t>(i - 1)] = Rational(-i);
            std::vector<Rational> a(input.begin(), input.begin() + m);
            return hessenberg_det(a, a, superdiag) / factorial(m);
        }
        case PsumForm::DetToPowerSums: {
            std::vector<Rational> first_col(static_cast<size_t>(m));
            for (long i = 1; i <= m; ++i)
                first_col[static_cast<size_t>(i - 1)] = Rational(i) * input[static_cast<size_t>(i - 1)];
            std::vector<Rational> band(input.begin(), input.begin() + m);
            std::vector<Rational> superdiag(static_cast<size_t>(m - 1), Rational(1));
            Rational det = hessenberg_det(first_col, band, superdiag);
            return (m % 2 == 1) ? det : -det;
        }
        case PsumForm::Convolution: {
            std::vector<Rational> b(static_cast<size_t>(m) + 1, Rational(0));
            b[0] = Rational(1);
            for (long k = 1; k <= m; ++k) {
                Rational acc(0);
                for (long i = 1; i <= k; ++i)
                    acc += input[static_cast<size_t>(i - 1)] * b[static_cast<size_t>(k - i)];
                b[static_cast<size_t>(k)] = acc / Rational(k);
            }
            return b[static_cast<size_t>(m)];
        }
        case PsumForm::ConvolutionInverse: {
            std::vector<Rational> a(static_cast<size_t>(m) + 1, Rational(0));
            for (long k = 1; k <= m; ++k) {
                Rational acc = Rational(k) * input[static_cast<size_t>(k - 1)];
                for (long j = 1; j <= k - 1; ++j)
                    acc -= input[static_cast<size_t>(j - 1)] * a[static_cast<size_t>(k - j)];
                a[static_cast<size_t>(k)] = acc;
            }
            return a[static_cast<size_t>(m)];
        }
    }
    throw std::logic_error("powersum_transform: unreachable");
}

}  // namespace qmzeta
