#include "figfig/rational.hpp"

#include <stdexcept>

namespace figfig {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational operator/(const Rational& x, const Rational& y) {
    if (y.sign() == 0) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(x.value_ / y.value_));
}

}  // namespace figfig
