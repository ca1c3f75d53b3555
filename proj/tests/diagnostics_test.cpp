#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "figfig/diagnostics.hpp"

using namespace figfig;

TEST_CASE("partition") {
    CHECK(check_partition(1).passed());
    CHECK(check_partition(2).passed());
    CHECK(check_partition(14).passed());
    const CheckReport r = check_partition(1'000'000);
    CHECK(r.passed());
    CHECK(r.name == "partition");
    CHECK(r.lo == 1);
    CHECK(r.hi == 1'000'000);
    for (Term n = 1; n < 300; ++n) REQUIRE(check_partition(n).passed());
    CHECK_THROWS_AS(check_partition(0), std::domain_error);
}

TEST_CASE("identities") {
    CHECK(check_identities(2).passed());
    CHECK(check_identities(10).passed());
    CHECK(check_identities(1'000'000).passed());
    for (Term n = 2; n < 300; ++n) REQUIRE(check_identities(n).passed());
    CHECK_THROWS_AS(check_identities(1), std::domain_error);
}

TEST_CASE("bounds") {
    CHECK(check_bounds(1).passed());
    CHECK(check_bounds(10).passed());
    CHECK(check_bounds(1'000'000).passed());
    CHECK_THROWS_AS(check_bounds(0), std::domain_error);
}

TEST_CASE("reports are deterministic") {
    const CheckReport x = check_bounds(5000);
    const CheckReport y = check_bounds(5000);
    CHECK(x.name == y.name);
    CHECK(x.passed() == y.passed());
}

TEST_CASE("remainder rows") {
    const auto r2 = remainder_table(SeqId::u, SeriesOrder(1), {2});
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].exact == 2);
    CHECK(r2[0].series == 2.0);
    CHECK(r2[0].remainder == 0.0);
    CHECK(r2[0].scaled == 0.0);

    const auto r8 = remainder_table(SeqId::u, SeriesOrder(1), {8});
    CHECK(r8[0].exact == 3);
    CHECK(r8[0].series == 4.0);
    CHECK(r8[0].remainder == -1.0);
    CHECK(r8[0].scaled == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));

    const auto big = remainder_table(SeqId::u, SeriesOrder(1), {1'000'000});
    CHECK(big[0].scaled >= -1.35);
    CHECK(big[0].scaled <= -1.00);
}

TEST_CASE("remainder table reads a single stream") {
    const std::vector<Term> ns{1, 5, 10, 20, 1000};
    const auto rows = remainder_table(SeqId::a, SeriesOrder(2), ns);
    REQUIRE(rows.size() == ns.size());
    CHECK(rows[2].exact == 69);
    CHECK(rows[3].exact == 260);
    for (std::size_t i = 0; i < ns.size(); ++i) {
        CHECK(rows[i].n == ns[i]);
        CHECK(rows[i].order == 2);
        CHECK(rows[i].series == eval_a_series(ns[i], SeriesOrder(2)));
        CHECK(rows[i].remainder ==
              doctest::Approx(static_cast<double>(rows[i].exact) - rows[i].series).epsilon(1e-9));
    }
}

TEST_CASE("remainder table preconditions") {
    CHECK_THROWS_AS(remainder_table(SeqId::u, SeriesOrder(1), {}), std::domain_error);
    CHECK_THROWS_AS(remainder_table(SeqId::u, SeriesOrder(1), {0, 3}), std::domain_error);
    CHECK_THROWS_AS(remainder_table(SeqId::u, SeriesOrder(1), {5, 5}), std::domain_error);
    CHECK_THROWS_AS(remainder_table(SeqId::u, SeriesOrder(1), {9, 4}), std::domain_error);
}

TEST_CASE("b remainders equal u remainders") {
    std::vector<Term> ns(2000);
    std::iota(ns.begin(), ns.end(), Term{1});
    ns.push_back(1'000'000);
    for (int K : {1, 2, 3, 10}) {
        const auto u = remainder_table(SeqId::u, SeriesOrder(K), ns);
        const auto b = remainder_table(SeqId::b, SeriesOrder(K), ns);
        for (std::size_t i = 0; i < ns.size(); ++i) {
            REQUIRE(b[i].remainder == u[i].remainder);
            REQUIRE(b[i].scaled == u[i].scaled);
            REQUIRE(b[i].exact == u[i].exact + ns[i]);
        }
    }
}

TEST_CASE("scaled u remainder stays in the alpha envelope") {
    std::vector<Term> ns(200'000 - 100);
    std::iota(ns.begin(), ns.end(), Term{100});
    for (int K : {1, 2, 3}) {
        const double envelope = 2.0 * std::fabs(alpha(K + 1).to_double());
        for (const RemainderRow& row : remainder_table(SeqId::u, SeriesOrder(K), ns)) {
            CAPTURE(K);
            CAPTURE(row.n);
            REQUIRE(std::fabs(row.scaled) <= envelope);
        }
    }
}

TEST_CASE("decade means drift toward alpha_2") {
    const double target = alpha(2).to_double();
    double prev = INFINITY;
    Term lo = 1000;
    for (int d = 3; d <= 6; ++d, lo *= 10) {
        const double mean = mean_scaled_remainder(SeqId::u, SeriesOrder(1), lo, lo * 10);
        const double gap = std::fabs(mean - target);
        CAPTURE(d);
        CAPTURE(mean);
        CHECK(gap < prev);
        prev = gap;
    }
    CHECK_THROWS_AS(mean_scaled_remainder(SeqId::u, SeriesOrder(1), 10, 10), std::domain_error);
}

TEST_CASE("leading a coefficient from the exact stream") {
    // f(n) = (a_n - n^2/2) / (n/2)^{3/2} ~ c1 + c2 (n/2)^{-1/4}; eliminate c2
    // between n = 1e5 and n = 1e6
    const auto rows = remainder_table(SeqId::a, SeriesOrder(1), {100'000, 1'000'000});
    double f[2];
    double x[2];
    for (int i = 0; i < 2; ++i) {
        const double n = static_cast<double>(rows[i].n);
        const double twice_excess = 2.0 * static_cast<double>(rows[i].exact) - n * n;
        f[i] = twice_excess / 2.0 / std::pow(n / 2.0, 1.5);
        x[i] = std::pow(n / 2.0, -0.25);
    }
    const double c1 = f[1] - (f[1] - f[0]) / (x[1] - x[0]) * x[1];
    CHECK(std::fabs(c1 - a_coeff(1).to_double()) < 0.05);
    CHECK(std::fabs(c1 - 2.0 / 3.0) > 1.0);
}
