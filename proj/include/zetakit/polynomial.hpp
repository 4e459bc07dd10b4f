#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "zetakit/rational.hpp"

namespace zetakit {

/// Dense univariate polynomial with rational coefficients; coefficient i
/// multiplies x^i. The zero polynomial has no coefficients, and no stored
/// polynomial carries a trailing zero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    /// c·x^power
    static Polynomial monomial(std::size_t power, Rational c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    /// Precondition: !is_zero().
    std::size_t degree() const;
    std::span<const Rational> coefficients() const { return coeffs_; }
    /// Coefficient of x^i, zero past the end.
    Rational coefficient(std::size_t i) const;

    Rational operator()(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const { return *this * Rational(-1); }

    Polynomial pow(unsigned exponent) const;

    /// p(x + shift)
    Polynomial shifted(const Rational& shift) const;
    /// p(-x)
    Polynomial reflected() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Renders in the input grammar of the expression parser, variable `u`,
    /// increasing powers: "-1/2 + 3*u + u^2". The zero polynomial is "0".
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

}  // namespace zetakit
