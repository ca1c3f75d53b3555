#pragma once

// Asymptotic series of the figure-figure sequences in the ladder of scales
// (n/2)^{1/2^k}:
//
//   u_n ~ sum_k alpha_k (n/2)^{1/2^k}
//   b_n ~ n + sum_k alpha_k (n/2)^{1/2^k}
//   a_n ~ n^2/2 + sum_k c_k (n/2)^{1 + 1/2^k}
//
// with alpha_k = (-1)^{k+1} 2^{1+(k-1)k/2} / prod_{j=1}^{k-1} (2^j + 1) and
// c_k = alpha_k 2^{k+1} / (2^k + 1), the term-wise integral of the u-series.

#include "figfig/rational.hpp"
#include "figfig/seqcore.hpp"

namespace figfig {

/// Number of retained series terms, 1 <= K <= 64.
class SeriesOrder {
public:
    static constexpr int max = 64;

    /// Throws std::domain_error outside [1, 64].
    explicit SeriesOrder(long long k);

    int value() const noexcept { return k_; }

private:
    int k_;
};

/// Exact coefficient of (n/2)^{1/2^k} in the u-series. Throws
/// std::domain_error for k < 1.
Rational alpha(long long k);

/// Exact coefficient of (n/2)^{1+1/2^k} in the a-series. Throws
/// std::domain_error for k < 1.
Rational a_coeff(long long k);

/// x^{1/2^k} by k successive square roots. Throws std::domain_error for
/// x < 0 (or NaN) and k outside [1, 64].
double root_pow(double x, long long k);

/// Truncated series, summed in increasing k. n must be >= 1
/// (std::domain_error otherwise).
///
/// The u-series value is rounded to the ulp grid of n + u, so that
/// eval_b_series(n, K) - eval_u_series(n, K) == n holds exactly in double
/// arithmetic (for n < 2^53).
double eval_u_series(Term n, SeriesOrder order);
double eval_b_series(Term n, SeriesOrder order);
double eval_a_series(Term n, SeriesOrder order);

/// eval_a_series(n, K) - n^2/2, summed without the leading term.
double eval_a_series_excess(Term n, SeriesOrder order);

}  // namespace figfig
