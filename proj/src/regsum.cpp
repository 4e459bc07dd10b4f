#include "zetakit/regsum.hpp"

#include "zetakit/exactnum.hpp"

namespace zetakit {

Polynomial antidifference(const Polynomial& f) {
    Polynomial out;
    const auto coeffs = f.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        // x^k = (B_{k+1}(x+1) - B_{k+1}(x)) / (k+1)
        out += bernoulli_poly(k + 1) * (coeffs[k] / Rational(static_cast<std::int64_t>(k + 1)));
    }
    return out - Polynomial{out.coefficient(0)};
}

RegularFunction::RegularFunction(Polynomial f) : f_(std::move(f)), antidiff_(antidifference(f_)) {}

RegularFunction::RegularFunction(Polynomial f, Polynomial antidiff) : f_(std::move(f)) {
    if (antidiff.shifted(Rational(1)) - antidiff != f_) {
        throw NotRegular("F(x+1) - F(x) does not reproduce f(x)");
    }
    antidiff_ = antidiff - Polynomial{antidiff.coefficient(0)};
}

MethodValue finite_sum(const RegularFunction& rf, std::int64_t a, std::int64_t b) {
    const Polynomial& F = rf.antidiff();
    return MethodValue(F(Rational(b) + Rational(1)) - F(Rational(a)));
}

MethodValue divergent_power_sum(std::size_t k) {
    return MethodValue(-bernoulli_plus(k + 1) / Rational(static_cast<std::int64_t>(k + 1)));
}

MethodValue divergent_alt_power_sum(std::size_t k) {
    return (Rational(1) - pow2(static_cast<int>(k) + 1)) * divergent_power_sum(k);
}

MethodValue theorem1_even(const RegularFunction& rf) {
    const auto coeffs = rf.f().coefficients();
    for (std::size_t i = 1; i < coeffs.size(); i += 2) {
        if (!coeffs[i].is_zero()) {
            throw OddTermPresent("coefficient of u^" + std::to_string(i) + " is nonzero");
        }
    }
    return MethodValue(-rf.f().coefficient(0) / Rational(2));
}

MethodValue theorem1_general(const RegularFunction& rf, int epsilon, std::int64_t t,
                             std::span<const Rational> limits) {
    if (epsilon != 1 && epsilon != -1) {
        throw std::invalid_argument("epsilon must be +1 or -1");
    }
    if (t < 1) {
        throw std::invalid_argument("t must be a positive integer");
    }
    if (limits.size() != static_cast<std::size_t>(t)) {
        throw ArityMismatch("expected " + std::to_string(t) + " limit values, got " +
                            std::to_string(limits.size()));
    }
    const Polynomial& f = rf.f();
    const Rational shift(static_cast<std::int64_t>(-epsilon) * t);
    if (f.reflected() != f.shifted(shift)) {
        throw NotQuasiEven("f(-x) != f(x - " + std::to_string(epsilon * t) + ")");
    }
    const std::int64_t delta = (1 - epsilon) / 2;
    Rational acc(0);
    for (std::int64_t i = 0; i < t; ++i) {
        const std::int64_t u = delta + i;
        acc += limits[static_cast<std::size_t>(i)] - f(Rational(-epsilon * u));
    }
    return MethodValue(Rational(epsilon) / Rational(2) * acc - f(Rational(0)) / Rational(2));
}

}  // namespace zetakit
