#pragma once

#include <gmpxx.h>

#include <string>

namespace figfig {

/// Exact signed rational in lowest terms, denominator >= 1.
class Rational {
public:
    Rational() = default;
    Rational(long num) : value_(num) {}
    /// Throws std::domain_error on a zero denominator.
    Rational(const mpz_class& num, const mpz_class& den);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    int sign() const { return sgn(value_); }

    /// "p" when the denominator is 1, "p/q" otherwise.
    std::string to_string() const;
    double to_double() const { return value_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    friend Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ + y.value_)); }
    friend Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ - y.value_)); }
    friend Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ * y.value_)); }
    /// Throws std::domain_error when y is zero.
    friend Rational operator/(const Rational& x, const Rational& y);

    friend bool operator==(const Rational& x, const Rational& y) { return x.value_ == y.value_; }
    friend bool operator<(const Rational& x, const Rational& y) { return x.value_ < y.value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    mpq_class value_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace figfig
