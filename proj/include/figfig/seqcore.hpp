#pragma once

// Streaming generator for Hofstadter's figure-figure sequences.
//
//   a = 1, 3, 7, 12, 18, 26, 35, ...   (A005228)
//   b = 2, 4, 5, 6, 8, 9, 10, ...      (A030124)
//   u = 1, 2, 2, 2, 3, 3, 3, ...       (A225687)
//
// b lists the first differences of a, the value sets of a and b partition the
// positive integers, and b is increasing. u is the inverse-counting sequence,
// b_n = n + u_n.
//
// Terms are 64-bit; arithmetic that would leave the range throws
// std::overflow_error (a_n < 2^63 up to n ~ 4.2e9).

#include <cstdint>
#include <string_view>
#include <vector>

namespace figfig {

using Term = std::uint64_t;

enum class SeqId { a, b, u };

/// Parses "a", "b" or "u". Throws std::invalid_argument otherwise.
SeqId parse_seq_id(std::string_view name);
std::string_view to_string(SeqId id);

/// One row (n, a_n, b_n, u_n).
struct Triple {
    Term n = 0;
    Term a = 0;
    Term b = 0;
    Term u = 0;

    Term get(SeqId id) const noexcept {
        switch (id) {
        case SeqId::a: return a;
        case SeqId::b: return b;
        case SeqId::u: return u;
        }
        return 0;
    }

    friend bool operator==(const Triple&, const Triple&) = default;
};

/// Generator state. Single owner; copying forks an independent stream.
///
/// Only the a-prefix a_1..a_m with a_m just above b_n is kept (m ~ sqrt(2n)).
/// The prefix is extended with a_{m+1} = a_m + m + u_m, where u_m is read off
/// the prefix itself through a_k - k < m <= a_{k+1} - (k+1).
class GenState {
public:
    GenState();

    /// Emits the triple for index n + 1 and advances.
    Triple next();

    Term n() const noexcept { return n_; }
    Term a() const noexcept { return a_; }
    Term b() const noexcept { return b_; }
    Term u() const noexcept { return b_ - n_; }

    /// a_1..a_m; strictly increasing.
    const std::vector<Term>& a_prefix() const noexcept { return prefix_; }
    /// Position in a_prefix of the smallest a-value strictly greater than b().
    std::size_t skip_cursor() const noexcept { return skip_; }

private:
    void extend_prefix();

    Term n_ = 0;
    Term a_ = 0;
    Term b_ = 0;
    std::vector<Term> prefix_;
    std::size_t skip_ = 0;
    // index k (1-based) with a_k - k < m <= a_{k+1} - (k+1) for m = prefix_.size()
    std::size_t ext_u_ = 1;
};

inline GenState new_state() { return GenState{}; }

inline Triple next_triple(GenState& state) { return state.next(); }

/// The next `count` triples. Throws std::domain_error when count == 0.
std::vector<Triple> take(GenState& state, std::size_t count);

/// n-th term of `seq`, streamed from a fresh state. Throws std::domain_error
/// when n == 0.
Term value_at(SeqId seq, Term n);

}  // namespace figfig
