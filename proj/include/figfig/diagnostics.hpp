#pragma once

// Pass/fail checks of the defining identities and bounds of the figure-figure
// sequences, and remainder tables for the truncated asymptotic series.
//
// Checks never throw on a violated property: they stop at the first failure
// and report it.

#include <optional>
#include <string>
#include <vector>

#include "figfig/asymptotics.hpp"
#include "figfig/seqcore.hpp"

namespace figfig {

struct CheckFailure {
    Term n = 0;
    std::string detail;
};

struct CheckReport {
    std::string name;
    Term lo = 0;
    Term hi = 0;
    std::optional<CheckFailure> first_failure;

    bool passed() const noexcept { return !first_failure.has_value(); }
};

/// Every integer in [1, N] is an a-value or a b-value, exactly once.
/// O(N) time, O(sqrt N) memory. N >= 1.
CheckReport check_partition(Term upto);

/// For n in [1, N]: b_n = a_{n+1} - a_n, b_n = n + u_n,
/// a_n = 1 + (n-1)n/2 + sum_{k<n} u_k, a_{u_n} - u_n < n <= a_{u_n+1} - (u_n+1),
/// and u_{n+1} - u_n in {0, 1}. N >= 2.
CheckReport check_identities(Term upto);

/// For n in [1, N], in exact integer arithmetic:
///   1 <= u_n < sqrt(2n) + 1/2
///   n + 1 <= b_n < n + sqrt(2n) + 1/2
///   n^2/2 + n/2 <= a_n < n^2/2 + (2^{3/2}/3) n^{3/2} - 1/3
/// N >= 1.
CheckReport check_bounds(Term upto);

struct RemainderRow {
    Term n = 0;
    int order = 0;
    Term exact = 0;
    double series = 0.0;
    /// exact - series
    double remainder = 0.0;
    /// remainder / (n/2)^{1/2^{K+1}} for u and b,
    /// remainder / (n/2)^{1+1/2^{K+1}} for a
    double scaled = 0.0;
};

/// One row per requested index, read off a single streaming pass.
/// Throws std::domain_error unless ns is non-empty, strictly increasing and
/// starts at >= 1.
std::vector<RemainderRow> remainder_table(SeqId seq, SeriesOrder order, const std::vector<Term>& ns);

/// Mean of the scaled remainder over every n in [lo, hi). 1 <= lo < hi.
double mean_scaled_remainder(SeqId seq, SeriesOrder order, Term lo, Term hi);

}  // namespace figfig
