#include "figfig/asymptotics.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace figfig {

namespace {

void require_positive(long long k, const char* what) {
    if (k < 1) throw std::domain_error(std::string(what) + ": k must be >= 1, got " + std::to_string(k));
}

void require_index(Term n) {
    if (n == 0) throw std::domain_error("series evaluation: n must be >= 1");
}

// double images of alpha_k and c_k for k = 1..64
struct CoefficientTable {
    std::array<double, SeriesOrder::max + 1> u{};
    std::array<double, SeriesOrder::max + 1> a{};

    CoefficientTable() {
        for (int k = 1; k <= SeriesOrder::max; ++k) {
            u[k] = alpha(k).to_double();
            a[k] = a_coeff(k).to_double();
        }
    }
};

const CoefficientTable& coefficients() {
    static const CoefficientTable table;
    return table;
}

// sum_{k=1}^K coeff[k] * x^{1/2^k} * scale, with the roots taken successively
double ladder_sum(const std::array<double, SeriesOrder::max + 1>& coeff, double x, int order,
                  double scale = 1.0) {
    double root = x;
    double sum = 0.0;
    for (int k = 1; k <= order; ++k) {
        root = std::sqrt(root);
        sum += coeff[k] * root * scale;
    }
    return sum;
}

}  // namespace

SeriesOrder::SeriesOrder(long long k) : k_(static_cast<int>(k)) {
    if (k < 1 || k > max) {
        throw std::domain_error("series order must be in [1, 64], got " + std::to_string(k));
    }
}

Rational alpha(long long k) {
    require_positive(k, "alpha");
    mpz_class num;
    mpz_ui_pow_ui(num.get_mpz_t(), 2, static_cast<unsigned long>(1 + (k - 1) * k / 2));
    mpz_class den = 1;
    mpz_class pow2 = 1;
    for (long long j = 1; j <= k - 1; ++j) {
        pow2 *= 2;
        den *= pow2 + 1;
    }
    if (k % 2 == 0) num = -num;
    return Rational(num, den);
}

Rational a_coeff(long long k) {
    require_positive(k, "a_coeff");
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(k));
    return alpha(k) * Rational(2 * pow2, pow2 + 1);
}

double root_pow(double x, long long k) {
    if (!(x >= 0.0)) throw std::domain_error("root_pow: x must be >= 0");
    if (k < 1 || k > SeriesOrder::max) {
        throw std::domain_error("root_pow: k must be in [1, 64], got " + std::to_string(k));
    }
    for (long long i = 0; i < k; ++i) x = std::sqrt(x);
    return x;
}

double eval_u_series(Term n, SeriesOrder order) {
    require_index(n);
    const double sum = ladder_sum(coefficients().u, static_cast<double>(n) / 2.0, order.value());
    // Round onto the ulp grid of n + sum, so that n + u is exact and
    // (n + u) - u == n for n < 2^53. Costs at most half an ulp of n + u.
    const double shift = static_cast<double>(n);
    return (shift + sum) - shift;
}

double eval_b_series(Term n, SeriesOrder order) {
    // exact: eval_u_series already lies on the grid of n + u
    return static_cast<double>(n) + eval_u_series(n, order);
}

double eval_a_series(Term n, SeriesOrder order) {
    require_index(n);
    const double half = static_cast<double>(n) / 2.0;
    // (n/2)^{1+1/2^k} = (n/2) * (n/2)^{1/2^k}; never form the full power
    return static_cast<double>(n) * half + ladder_sum(coefficients().a, half, order.value(), half);
}

double eval_a_series_excess(Term n, SeriesOrder order) {
    require_index(n);
    const double half = static_cast<double>(n) / 2.0;
    return ladder_sum(coefficients().a, half, order.value(), half);
}

}  // namespace figfig
