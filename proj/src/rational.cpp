#include "zetakit/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace zetakit {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = Raw(num, den);
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view digits) {
        if (digits.empty()) {
            throw std::invalid_argument("empty integer in rational literal");
        }
        std::size_t start = (digits.front() == '-' || digits.front() == '+') ? 1 : 0;
        if (start == digits.size()) {
            throw std::invalid_argument("sign without digits in rational literal");
        }
        for (std::size_t i = start; i < digits.size(); ++i) {
            if (digits[i] < '0' || digits[i] > '9') {
                throw std::invalid_argument("bad digit in rational literal: " + std::string(digits));
            }
        }
        return BigInt(std::string(digits.front() == '+' ? digits.substr(1) : digits));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::pow(int exponent) const {
    if (exponent < 0) {
        return (Rational(1) / *this).pow(-exponent);
    }
    Rational result(1);
    Rational base = *this;
    for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
        if (e & 1U) result *= base;
        if (e > 1) base *= base;
    }
    return result;
}

double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::to_string() const {
    if (is_integer()) {
        return numerator().str();
    }
    return numerator().str() + "/" + denominator().str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow2(int e) {
    if (e >= 0) {
        return Rational(BigInt(1) << e);
    }
    return Rational(BigInt(1), BigInt(1) << -e);
}

}  // namespace zetakit
