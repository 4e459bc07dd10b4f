#include "zetakit/values.hpp"

#include <stdexcept>
#include <vector>

#include "zetakit/exactnum.hpp"
#include "zetakit/regsum.hpp"

namespace zetakit {

namespace {

Rational sign_power(unsigned e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Rational int_rat(std::int64_t n) { return Rational(n); }

void require_positive(unsigned k, const char* what) {
    if (k == 0) {
        throw std::invalid_argument(std::string(what) + " requires k >= 1");
    }
}

// zeta(-k) for k >= 0; k = 0 is the method value -1/2.
Rational zeta_nonpositive(unsigned k) { return divergent_power_sum(k).value(); }

}  // namespace

std::string_view name_of(FunctionId fn) {
    switch (fn) {
        case FunctionId::Zeta: return "zeta";
        case FunctionId::Eta: return "eta";
        case FunctionId::Lambda: return "lambda";
        case FunctionId::Beta: return "beta";
    }
    return "?";
}

std::optional<FunctionId> parse_function(std::string_view name) {
    for (auto fn : {FunctionId::Zeta, FunctionId::Eta, FunctionId::Lambda, FunctionId::Beta}) {
        if (name == name_of(fn)) return fn;
    }
    return std::nullopt;
}

PiValue eta_even(unsigned k) {
    require_positive(k, "eta_even");
    const unsigned n = 2 * k;
    Rational c = sign_power(k - 1) * (pow2(static_cast<int>(n) - 1) - Rational(1)) * bernoulli_minus(n) /
                 Rational(factorial(n));
    return PiValue::term(c, n);
}

PiValue eta_even_recurrence(unsigned k) {
    require_positive(k, "eta_even_recurrence");
    // pi^(2v) / (2v+1)! with alternating sign, v = 0..k
    std::vector<PiValue> weights;
    weights.reserve(k + 1);
    for (unsigned v = 0; v <= k; ++v) {
        weights.push_back(PiValue::term(sign_power(v) / Rational(factorial(2 * v + 1)), 2 * v));
    }
    std::vector<PiValue> eta{PiValue(divergent_alt_power_sum(0).value())};
    for (unsigned j = 1; j <= k; ++j) {
        // weights[0] = 1, so eta(2j) = -sum_{v=1}^{j} weights[v] * eta(2(j-v))
        PiValue acc;
        for (unsigned v = 1; v <= j; ++v) {
            acc -= weights[v] * eta[j - v];
        }
        eta.push_back(std::move(acc));
    }
    return eta[k];
}

PiValue zeta_even(unsigned k) {
    require_positive(k, "zeta_even");
    return eta_even(k) / (Rational(1) - pow2(1 - 2 * static_cast<int>(k)));
}

PiValue lambda_even(unsigned k) {
    require_positive(k, "lambda_even");
    return (Rational(1) - pow2(-2 * static_cast<int>(k))) * zeta_even(k);
}

PiValue zeta_neg(unsigned k) {
    require_positive(k, "zeta_neg");
    return PiValue(-bernoulli_plus(k + 1) / int_rat(k + 1));
}

PiValue eta_neg(unsigned k) {
    return PiValue((Rational(1) - pow2(static_cast<int>(k) + 1)) * zeta_nonpositive(k));
}

PiValue lambda_neg(unsigned k) {
    return PiValue((Rational(1) - pow2(static_cast<int>(k))) * zeta_nonpositive(k));
}

PiValue beta_neg_bernoulli(unsigned k) {
    require_positive(k, "beta_neg_bernoulli");
    Rational acc(0);
    for (unsigned u = 1; u <= k; ++u) {
        const Rational b = bernoulli_plus(u);
        if (b.is_zero()) continue;
        acc += sign_power(u) * pow2(static_cast<int>(u)) * (pow2(static_cast<int>(u)) - Rational(1)) *
               Rational(binomial(k, u)) * b;
    }
    return PiValue(-acc / int_rat(2 * static_cast<std::int64_t>(k)));
}

PiValue beta_neg_euler(unsigned k) { return PiValue(Rational(euler_number(k)) / Rational(2)); }

PiValue beta_odd_bernoulli(unsigned k) {
    const unsigned n = 2 * k + 1;
    Rational acc(0);
    for (unsigned u = 0; u <= k; ++u) {
        const int two_u = 2 * static_cast<int>(u);
        // u = 0 contributes (2^-1 - 1) = -1/2
        acc += pow2(two_u) * (pow2(two_u - 1) - Rational(1)) * Rational(binomial(n, 2 * u)) *
               bernoulli_minus(2 * u);
    }
    const Rational prefactor = sign_power(k + 1) / (pow2(static_cast<int>(n)) * Rational(factorial(n)));
    return PiValue::term(prefactor * acc, n);
}

PiValue beta_odd_euler(unsigned k) {
    const Rational c = sign_power(k) * Rational(euler_number(2 * k)) /
                       (pow2(2 * static_cast<int>(k) + 2) * Rational(factorial(2 * k)));
    return PiValue::term(c, 2 * k + 1);
}

bool beta_functional_check(unsigned k) {
    require_positive(k, "beta_functional_check");
    const unsigned s = 2 * k + 1;
    const PiValue lhs = beta_neg_euler(2 * k);
    // (2/pi)^s * sin(pi s/2) * Gamma(s) * beta(s), sin = (-1)^k, Gamma(2k+1) = (2k)!
    const Rational scale = pow2(static_cast<int>(s)) * sign_power(k) * Rational(factorial(2 * k));
    PiValue rhs;
    try {
        rhs = (scale * beta_odd_euler(k)).divided_by_pi_power(s);
    } catch (const std::domain_error&) {
        return false;
    }
    return lhs == rhs;
}

std::string_view Unsupported::code() const {
    return reason == UnsupportedReason::PoleAtOne ? "pole" : "no-closed-form";
}

EvalResult eval(FunctionId fn, std::int64_t s) {
    const auto k = [](std::int64_t v) { return static_cast<unsigned>(v); };
    const std::string label = std::string(name_of(fn)) + "(" + std::to_string(s) + ")";
    if (fn == FunctionId::Beta) {
        if (s <= 0) return beta_neg_bernoulli(k(1 - s));
        if (s % 2 == 1) return beta_odd_bernoulli(k((s - 1) / 2));
        return Unsupported{UnsupportedReason::NoClosedForm,
                           label + ": no finite closed form is known for beta at even s"};
    }
    if (s <= 0) {
        switch (fn) {
            case FunctionId::Zeta: return s == 0 ? PiValue(zeta_nonpositive(0)) : zeta_neg(k(-s));
            case FunctionId::Eta: return eta_neg(k(-s));
            default: return lambda_neg(k(-s));
        }
    }
    if (s == 1 && fn != FunctionId::Eta) {
        return Unsupported{UnsupportedReason::PoleAtOne, label + ": simple pole at s = 1"};
    }
    if (s % 2 == 1) {
        return Unsupported{UnsupportedReason::NoClosedForm,
                           label + ": no closed form is known at odd s"};
    }
    switch (fn) {
        case FunctionId::Zeta: return zeta_even(k(s / 2));
        case FunctionId::Eta: return eta_even(k(s / 2));
        default: return lambda_even(k(s / 2));
    }
}

}  // namespace zetakit
