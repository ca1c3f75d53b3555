#include "figfig/seqcore.hpp"

#include <stdexcept>
#include <string>

namespace figfig {

namespace {

Term checked_add(Term x, Term y) {
    Term r = 0;
    if (__builtin_add_overflow(x, y, &r)) {
        throw std::overflow_error("figure-figure term exceeds 64-bit range");
    }
    return r;
}

}  // namespace

SeqId parse_seq_id(std::string_view name) {
    if (name == "a") return SeqId::a;
    if (name == "b") return SeqId::b;
    if (name == "u") return SeqId::u;
    throw std::invalid_argument("unknown sequence '" + std::string(name) + "' (expected a, b or u)");
}

std::string_view to_string(SeqId id) {
    switch (id) {
    case SeqId::a: return "a";
    case SeqId::b: return "b";
    case SeqId::u: return "u";
    }
    return "?";
}

// The extension rule needs a_{u_m + 1} inside the prefix, which only holds
// from m = 3 on, so the first three terms are seeded.
GenState::GenState() : prefix_{1, 3, 7} {}

void GenState::extend_prefix() {
    const Term m = prefix_.size();
    // advance k until m <= a_{k+1} - (k+1); prefix_[k] holds a_{k+1}
    while (prefix_[ext_u_] - (ext_u_ + 1) < m) {
        ++ext_u_;
    }
    prefix_.push_back(checked_add(prefix_.back(), checked_add(m, ext_u_)));
}

Triple GenState::next() {
    if (n_ == 0) {
        n_ = 1;
        a_ = 1;
        b_ = 2;
        skip_ = 1;  // a_2 = 3 is the first a-value above 2
        return {n_, a_, b_, u()};
    }

    a_ = checked_add(a_, b_);
    Term candidate = b_ + 1;
    if (prefix_[skip_] == candidate) {
        // a-values differ by at least 2, so one skip is enough
        ++candidate;
        ++skip_;
        if (skip_ == prefix_.size()) extend_prefix();
    }
    b_ = candidate;
    ++n_;
    return {n_, a_, b_, u()};
}

std::vector<Triple> take(GenState& state, std::size_t count) {
    if (count == 0) throw std::domain_error("take: count must be >= 1");
    std::vector<Triple> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(state.next());
    return out;
}

Term value_at(SeqId seq, Term n) {
    if (n == 0) throw std::domain_error("value_at: index must be >= 1");
    GenState state;
    Triple t;
    for (Term i = 0; i < n; ++i) t = state.next();
    return t.get(seq);
}

}  // namespace figfig
