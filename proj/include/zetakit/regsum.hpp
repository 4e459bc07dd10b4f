#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

#include "zetakit/polynomial.hpp"
#include "zetakit/rational.hpp"

namespace zetakit {

/// Value a summation assigns under the generalized-sum rules. It coincides
/// with the classical sum on finite index sets and is the method value
/// otherwise; it is deliberately not implicitly convertible to Rational.
class MethodValue {
public:
    explicit MethodValue(Rational value) : value_(std::move(value)) {}

    const Rational& value() const { return value_; }

    friend MethodValue operator+(const MethodValue& a, const MethodValue& b) {
        return MethodValue(a.value_ + b.value_);
    }
    friend MethodValue operator-(const MethodValue& a, const MethodValue& b) {
        return MethodValue(a.value_ - b.value_);
    }
    friend MethodValue operator*(const Rational& c, const MethodValue& a) {
        return MethodValue(c * a.value_);
    }
    friend bool operator==(const MethodValue&, const MethodValue&) = default;

private:
    Rational value_;
};

class NotRegular : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
class OddTermPresent : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
class NotQuasiEven : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
class ArityMismatch : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// F with F(x+1) - F(x) = f(x) and F(0) = 0.
Polynomial antidifference(const Polynomial& f);

/// A polynomial f together with its antidifference F, F(0) = 0.
class RegularFunction {
public:
    explicit RegularFunction(Polynomial f);

    /// Accepts a caller-supplied antidifference, normalized to F(0) = 0.
    /// Throws NotRegular unless F(x+1) - F(x) = f(x) identically.
    RegularFunction(Polynomial f, Polynomial antidiff);

    const Polynomial& f() const { return f_; }
    const Polynomial& antidiff() const { return antidiff_; }

private:
    Polynomial f_;
    Polynomial antidiff_;
};

/// Sum of f over Z_{a,b}: F(b+1) - F(a), for every integer pair.
MethodValue finite_sum(const RegularFunction& rf, std::int64_t a, std::int64_t b);

/// Method value of sum_{u>=1} u^k: -B^+_{k+1}/(k+1).
MethodValue divergent_power_sum(std::size_t k);

/// Method value of sum_{u>=1} (-1)^(u-1) u^k.
MethodValue divergent_alt_power_sum(std::size_t k);

/// sum_{u>=1} f(u) = -f(0)/2 for even f. Throws OddTermPresent otherwise.
MethodValue theorem1_even(const RegularFunction& rf);

/// Summation formula for quasi-even f, f(-x) = f(x - epsilon*t):
///
///   sum_{u>=1} f(u) = (epsilon/2) sum_{u=delta}^{t-1+delta}
///                     (L_u - f(-epsilon*u)) - f(0)/2,   delta = (1-epsilon)/2
///
/// where `limits[i]` supplies L_{delta+i}, the regularized value of
/// lim_{n->inf} f(n - epsilon*u). For polynomial f that limit has no
/// classical value, so the caller provides it.
MethodValue theorem1_general(const RegularFunction& rf, int epsilon, std::int64_t t,
                             std::span<const Rational> limits);

}  // namespace zetakit
