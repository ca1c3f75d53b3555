#include "figfig/diagnostics.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace figfig {

namespace {

using Wide = __int128;

std::string str(Wide v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string out;
    while (m != 0) {
        out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(m % 10)));
        m /= 10;
    }
    return neg ? "-" + out : out;
}

CheckReport fail(CheckReport report, Term n, std::string detail) {
    report.first_failure = CheckFailure{n, std::move(detail)};
    return report;
}

void require_upto(Term upto, Term min, const char* check) {
    if (upto < min) {
        throw std::domain_error(std::string(check) + ": upper index must be >= " + std::to_string(min));
    }
}

// (n/2)^{1/2^{K+1}}
double next_scale(Term n, SeriesOrder order) {
    return std::sqrt(root_pow(static_cast<double>(n) / 2.0, order.value()));
}

RemainderRow make_row(SeqId seq, SeriesOrder order, const Triple& t) {
    RemainderRow row;
    row.n = t.n;
    row.order = order.value();
    row.exact = t.get(seq);
    switch (seq) {
    case SeqId::u:
        row.series = eval_u_series(t.n, order);
        row.remainder = static_cast<double>(t.u) - row.series;
        row.scaled = row.remainder / next_scale(t.n, order);
        break;
    case SeqId::b:
        // b - n = u exactly, so the remainder is the u remainder bit for bit
        row.series = eval_b_series(t.n, order);
        row.remainder = static_cast<double>(t.u) - eval_u_series(t.n, order);
        row.scaled = row.remainder / next_scale(t.n, order);
        break;
    case SeqId::a: {
        row.series = eval_a_series(t.n, order);
        // a_n - n^2/2 is taken exactly before going to floating point
        const Wide twice_excess = 2 * static_cast<Wide>(t.a) - static_cast<Wide>(t.n) * static_cast<Wide>(t.n);
        row.remainder = static_cast<double>(twice_excess) / 2.0 - eval_a_series_excess(t.n, order);
        row.scaled = row.remainder / (static_cast<double>(t.n) / 2.0 * next_scale(t.n, order));
        break;
    }
    }
    return row;
}

}  // namespace

CheckReport check_partition(Term upto) {
    require_upto(upto, 1, "check_partition");
    CheckReport report{"partition", 1, upto, std::nullopt};

    GenState state;
    std::deque<Term> pending_a;  // a-values <= upto not yet reached
    Term expected = 1;           // smallest integer not yet accounted for
    Term last_a = 0;
    Term last_b = 0;

    auto drain_a = [&] {
        while (!pending_a.empty() && pending_a.front() == expected) {
            pending_a.pop_front();
            ++expected;
        }
    };

    for (;;) {
        const Triple t = state.next();
        if (t.a <= last_a) return fail(report, t.n, "a not strictly increasing at a = " + std::to_string(t.a));
        if (t.b <= last_b) return fail(report, t.n, "b not strictly increasing at b = " + std::to_string(t.b));
        last_a = t.a;
        last_b = t.b;

        if (t.a <= upto) {
            if (t.a < expected) return fail(report, t.a, std::to_string(t.a) + " is both an a-value and a b-value");
            pending_a.push_back(t.a);
        }
        if (t.b > upto) break;

        // a_{n+1} = a_n + b_n > b_n, so every a-value below b_n has arrived
        drain_a();
        if (!pending_a.empty() && pending_a.front() == t.b) {
            return fail(report, t.b, std::to_string(t.b) + " is both an a-value and a b-value");
        }
        if (t.b != expected) return fail(report, expected, std::to_string(expected) + " is neither an a-value nor a b-value");
        ++expected;
        drain_a();
    }

    drain_a();
    if (expected <= upto) {
        return fail(report, expected, std::to_string(expected) + " is neither an a-value nor a b-value");
    }
    return report;
}

CheckReport check_identities(Term upto) {
    require_upto(upto, 2, "check_identities");
    CheckReport report{"identities", 1, upto, std::nullopt};

    // u_n < sqrt(2n) + 1/2 bounds the a-indices the inequality needs
    const Term kept = static_cast<Term>(std::sqrt(2.0 * static_cast<double>(upto))) + 3;
    std::vector<Term> a_hist{0};  // 1-based
    std::vector<Triple> deferred;  // rows whose a_{u_n+1} was not yet generated

    auto sandwich = [&](const Triple& t) -> std::optional<std::string> {
        if (t.u + 1 >= a_hist.size()) {
            return "a_" + std::to_string(t.u + 1) + " lies outside the retained prefix";
        }
        const Wide lower = static_cast<Wide>(a_hist[t.u]) - t.u;
        const Wide upper = static_cast<Wide>(a_hist[t.u + 1]) - (t.u + 1);
        if (!(lower < static_cast<Wide>(t.n) && static_cast<Wide>(t.n) <= upper)) {
            return "a(u_n) - u_n < n <= a(u_n + 1) - (u_n + 1) fails: " + str(lower) + " < " + std::to_string(t.n) +
                   " <= " + str(upper);
        }
        return std::nullopt;
    };

    GenState state;
    Triple prev;
    Wide u_sum = 0;  // sum_{k<n} u_k
    for (Term n = 1; n <= upto + 1; ++n) {
        const Triple t = state.next();
        if (n <= kept) a_hist.push_back(t.a);

        if (n > 1) {
            if (prev.b != t.a - prev.a) {
                return fail(report, prev.n,
                            "b_n = " + std::to_string(prev.b) + " but a_{n+1} - a_n = " + std::to_string(t.a - prev.a));
            }
            if (t.u != prev.u && t.u != prev.u + 1) {
                return fail(report, prev.n, "u_{n+1} - u_n not in {0, 1}");
            }
        }
        if (n > upto) break;

        if (static_cast<Wide>(t.b) != static_cast<Wide>(t.n) + t.u) {
            return fail(report, n, "b_n != n + u_n");
        }
        const Wide closed = 1 + static_cast<Wide>(n - 1) * n / 2 + u_sum;
        if (closed != static_cast<Wide>(t.a)) {
            return fail(report, n, "a_n = " + std::to_string(t.a) + " but 1 + (n-1)n/2 + sum u_k = " + str(closed));
        }
        if (t.u + 1 > n) {
            deferred.push_back(t);
        } else if (auto err = sandwich(t)) {
            return fail(report, n, *err);
        }

        u_sum += t.u;
        prev = t;
    }

    for (const Triple& t : deferred) {
        if (auto err = sandwich(t)) return fail(report, t.n, *err);
    }
    return report;
}

CheckReport check_bounds(Term upto) {
    require_upto(upto, 1, "check_bounds");
    CheckReport report{"bounds", 1, upto, std::nullopt};

    GenState state;
    for (Term i = 1; i <= upto; ++i) {
        const Triple t = state.next();
        const Wide n = t.n;
        const Wide u = t.u;
        const Wide b = t.b;
        const Wide a = t.a;

        // u - 1/2 < sqrt(2n)  <=>  (2u - 1)^2 < 8n, with 2u - 1 > 0
        if (u < 1) return fail(report, t.n, "u_n < 1");
        if ((2 * u - 1) * (2 * u - 1) >= 8 * n) {
            return fail(report, t.n, "u_n = " + str(u) + " violates u_n < sqrt(2n) + 1/2");
        }
        if (b < n + 1) return fail(report, t.n, "b_n < n + 1");
        if ((2 * (b - n) - 1) * (2 * (b - n) - 1) >= 8 * n) {
            return fail(report, t.n, "b_n = " + str(b) + " violates b_n < n + sqrt(2n) + 1/2");
        }
        if (2 * a < n * n + n) {
            return fail(report, t.n, "a_n = " + str(a) + " violates a_n >= n^2/2 + n/2");
        }
        // a - n^2/2 + 1/3 < (2^{3/2}/3) n^{3/2}  <=>  d < 4 sqrt(2) n^{3/2}
        // with d = 6a - 3n^2 + 2; square when d > 0
        const Wide d = 6 * a - 3 * n * n + 2;
        if (d > 0 && d * d >= 32 * n * n * n) {
            return fail(report, t.n, "a_n = " + str(a) + " violates a_n < n^2/2 + (2^{3/2}/3) n^{3/2} - 1/3");
        }
    }
    return report;
}

std::vector<RemainderRow> remainder_table(SeqId seq, SeriesOrder order, const std::vector<Term>& ns) {
    if (ns.empty()) throw std::domain_error("remainder_table: no indices requested");
    if (ns.front() < 1) throw std::domain_error("remainder_table: indices must be >= 1");
    for (std::size_t i = 1; i < ns.size(); ++i) {
        if (ns[i] <= ns[i - 1]) throw std::domain_error("remainder_table: indices must be strictly increasing");
    }

    std::vector<RemainderRow> rows;
    rows.reserve(ns.size());
    GenState state;
    for (Term want : ns) {
        Triple t;
        while (state.n() < want) t = state.next();
        rows.push_back(make_row(seq, order, t));
    }
    return rows;
}

double mean_scaled_remainder(SeqId seq, SeriesOrder order, Term lo, Term hi) {
    if (lo < 1 || hi <= lo) throw std::domain_error("mean_scaled_remainder: need 1 <= lo < hi");
    GenState state;
    double sum = 0.0;
    while (state.n() + 1 < hi) {
        const Triple t = state.next();
        if (t.n >= lo) sum += make_row(seq, order, t).scaled;
    }
    return sum / static_cast<double>(hi - lo);
}

}  // namespace figfig
