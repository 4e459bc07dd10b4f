#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace zetakit {

using BigInt = boost::multiprecision::mpz_int;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "p" or "p/q" with an optional leading '-'.
    static Rational parse(std::string_view text);

    BigInt numerator() const;
    BigInt denominator() const;

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    Rational operator-() const { return Rational(Raw(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Integer power; negative exponents invert (throws on zero base).
    Rational pow(int exponent) const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const;

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

private:
    using Raw = boost::multiprecision::mpq_rational;
    explicit Rational(Raw v) : value_(std::move(v)) {}

    Raw value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// 2^e as an exact rational, e may be negative.
Rational pow2(int e);

}  // namespace zetakit
