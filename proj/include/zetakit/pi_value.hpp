#pragma once

#include <map>
#include <string>

#include "zetakit/rational.hpp"

namespace zetakit {

/// Exact value sum_m q_m * pi^m over non-negative powers m. Zero coefficients
/// are never stored, so equality is plain map equality.
class PiValue {
public:
    PiValue() = default;
    PiValue(Rational rational);  // NOLINT(google-explicit-constructor)

    static PiValue term(Rational coeff, unsigned pi_power);

    const std::map<unsigned, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    /// Coefficient of pi^m (zero when absent).
    Rational coefficient(unsigned pi_power) const;

    PiValue& operator+=(const PiValue& o);
    PiValue& operator-=(const PiValue& o);
    PiValue& operator*=(const Rational& c);
    friend PiValue operator+(PiValue a, const PiValue& b) { return a += b; }
    friend PiValue operator-(PiValue a, const PiValue& b) { return a -= b; }
    friend PiValue operator*(PiValue a, const Rational& c) { return a *= c; }
    friend PiValue operator*(const Rational& c, PiValue a) { return a *= c; }
    friend PiValue operator*(const PiValue& a, const PiValue& b);
    PiValue operator/(const Rational& c) const;

    /// Divides by pi^m; throws std::domain_error if a term of lower power exists.
    PiValue divided_by_pi_power(unsigned m) const;

    friend bool operator==(const PiValue&, const PiValue&) = default;

    /// "c" for power 0, "(p/q)*pi^m" otherwise, joined by " + " in increasing
    /// power; "0" when empty.
    std::string to_string() const;

private:
    void add_term(unsigned power, const Rational& c);

    std::map<unsigned, Rational> terms_;
};

}  // namespace zetakit
