#pragma once

#include <vector>

#include "qmzeta/rational.hpp"

namespace qmzeta {

/// Determinant of a lower Hessenberg matrix given by its first column
/// first_col[i-1] = M[i][1], the constant bands band[k-1] = M[i][j] for
/// j >= 2 and k = i - j + 1 (so band[0] is the diagonal from row 2 on), and
/// the superdiagonal superdiag[i-1] = M[i][i+1]. All other entries are zero.
/// Every matrix used here satisfies M[1][1] = first_col[0] = band value 1, so
/// the first row needs no special casing. Computed by the last-row expansion
/// recurrence in O(dim^2) ring operations.
Rational hessenberg_det(const std::vector<Rational>& first_col,
                        const std::vector<Rational>& band,
                        const std::vector<Rational>& superdiag);

/// Complete Bell polynomial Y_m(x_1, ..., x_m) as the literal sum over
/// partitions of m: sum m! / (i_1! ... i_m!) * prod_j (x_j / j!)^(i_j).
Rational bell_complete_partition(const std::vector<Rational>& xs, long m);

/// Complete Bell polynomial via the Hessenberg determinant with entries
/// a_j = x_j / (j-1)! and superdiagonal -1, -2, ..., -(m-1).
Rational bell_complete_det(const std::vector<Rational>& xs, long m);

/// Complete Bell polynomial; evaluates both the partition sum and the
/// determinant form and insists they agree.
Rational bell_complete(const std::vector<Rational>& xs, long m);

/// Complete homogeneous symmetric function h_K from power sums g_1..g_K:
/// h_K = Y_K(0! g_1, 1! g_2, ..., (K-1)! g_K) / K!.
Rational h_from_powersums(const std::vector<Rational>& g, long K);

/// Elementary symmetric function e_K from power sums via the Newton
/// recurrence K e_K = sum_{i=1}^{K} (-1)^(i-1) g_i e_(K-i).
Rational e_from_powersums(const std::vector<Rational>& g, long K);

/// The five equivalent forms for passing between a power-sum-like sequence a
/// and its exponential-generating counterpart b (b = exp-transform of a):
///   PartitionSum        b_m from a, as a sum over partitions
///   DetFromPowerSums    b_m = det(...a...) / m!
///   DetToPowerSums      a_m = (-1)^(m-1) det(...b...)
///   Convolution         b_m from a, via m b_m = sum a_i b_(m-i)
///   ConvolutionInverse  a_m from b, via a_m = m b_m - sum_(j<m) b_j a_(m-j)
enum class PsumForm {
    PartitionSum,
    DetFromPowerSums,
    DetToPowerSums,
    Convolution,
    ConvolutionInverse,
};

/// Applies the selected form to input (a or b as documented above, indexed
/// from 1) and returns the m-th output term. input must hold at least m
/// leading terms.
Rational powersum_transform(PsumForm form, const std::vector<Rational>& input, long m);

}  // namespace qmzeta
