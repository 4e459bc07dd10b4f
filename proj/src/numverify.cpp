#include "zetakit/numverify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <span>

#include "zetakit/exactnum.hpp"
#include "zetakit/regsum.hpp"

namespace zetakit::numverify {

namespace {

// "3." followed by 100 decimals.
constexpr std::string_view kPiDigits =
    "3"
    "1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679";

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

VerificationReport make_report(std::string name, double lhs, double rhs, double tol, std::int64_t terms,
                               double bound) {
    VerificationReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.deviation = std::abs(lhs - rhs);
    r.tolerance = tol;
    r.passed = r.deviation <= tol;
    r.terms_used = terms;
    r.error_bound = bound;
    return r;
}

// Collapses the trailing depth+1 partial sums by repeated neighbour averaging.
double averaged_tail(std::span<const double> partials, int depth) {
    const std::size_t width = std::min<std::size_t>(partials.size(), static_cast<std::size_t>(depth) + 1);
    std::vector<double> window(partials.end() - static_cast<std::ptrdiff_t>(width), partials.end());
    for (std::size_t len = width; len > 1; --len) {
        for (std::size_t i = 0; i + 1 < len; ++i) {
            window[i] = 0.5 * (window[i] + window[i + 1]);
        }
    }
    return window.front();
}

// sum_{n>=m} (alpha*n + beta)^(-s) by Euler-Maclaurin with a few corrections.
double power_tail(std::int64_t m, double s, double alpha, double beta) {
    const double x = alpha * static_cast<double>(m) + beta;
    double tail = std::pow(x, 1.0 - s) / (alpha * (s - 1.0)) + 0.5 * std::pow(x, -s);
    double rising = s;  // (s)_{2j-1}
    for (unsigned j = 1; j <= 4; ++j) {
        if (j > 1) rising *= (s + 2.0 * j - 3.0) * (s + 2.0 * j - 2.0);
        const double b = (bernoulli_minus(2 * j) / Rational(factorial(2 * j))).to_double();
        tail += b * rising * std::pow(alpha, 2.0 * j - 1.0) * std::pow(x, -s - 2.0 * j + 1.0);
    }
    return tail;
}

double closed_form(FunctionId fn, std::int64_t s) {
    auto result = eval(fn, s);
    if (const auto* u = std::get_if<Unsupported>(&result)) {
        throw UnsupportedValue(u->detail);
    }
    return to_float(std::get<PiValue>(result));
}

double pi_double() { return std::numbers::pi; }

}  // namespace

void NumericConfig::validate() const {
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (max_terms < 1) throw std::invalid_argument("max_terms must be at least 1");
    if (acceleration_depth < 0) throw std::invalid_argument("acceleration_depth must be non-negative");
}

Rational pi_to_rational(int digits) {
    if (digits < 1 || digits > kMaxPiDigits) {
        throw DigitsOutOfRange("pi digits must lie in 1..100, got " + std::to_string(digits));
    }
    const BigInt num(std::string(kPiDigits.substr(0, static_cast<std::size_t>(digits) + 1)));
    BigInt den = 1;
    for (int i = 0; i < digits; ++i) den *= 10;
    return Rational(num, den);
}

double to_float(const PiValue& v, int digits) {
    const double pi = pi_to_rational(digits).to_double();
    double acc = 0.0;
    for (const auto& [m, q] : v.terms()) {
        acc += q.to_double() * std::pow(pi, static_cast<double>(m));
    }
    return acc;
}

SeriesEstimate sum_alternating(const std::function<double(std::int64_t)>& term, const NumericConfig& cfg) {
    cfg.validate();
    {
        int last_sign = 0;
        int seen = 0;
        for (std::int64_t u = 1; u <= cfg.max_terms && seen < 100; ++u) {
            const double t = term(u);
            if (t == 0.0) continue;
            const int sgn = t > 0 ? 1 : -1;
            if (sgn == last_sign) {
                throw NonAlternating("terms " + std::to_string(u - 1) + " and " + std::to_string(u) +
                                     " share a sign");
            }
            last_sign = sgn;
            ++seen;
        }
    }

    std::vector<double> partials;
    partials.reserve(static_cast<std::size_t>(std::min<std::int64_t>(cfg.max_terms, 1 << 16)));
    double running = 0.0;
    std::int64_t checkpoint = std::min<std::int64_t>(32, cfg.max_terms);
    double previous = std::nan("");
    SeriesEstimate est;
    for (std::int64_t u = 1; u <= cfg.max_terms; ++u) {
        running += term(u);
        partials.push_back(running);
        if (u != checkpoint) continue;
        const double current = averaged_tail(partials, cfg.acceleration_depth);
        est.value = current;
        est.terms_used = u;
        est.raw_partial = running;
        if (std::abs(current - previous) <= 1e-3 * cfg.tolerance) break;
        previous = current;
        checkpoint = std::min(checkpoint * 2, cfg.max_terms);
    }
    est.remainder_bound = std::abs(term(est.terms_used + 1));
    return est;
}

VerificationReport verify_value(FunctionId fn, std::int64_t s, const NumericConfig& cfg) {
    cfg.validate();
    const std::string name = std::string(name_of(fn)) + "(" + std::to_string(s) + ")";
    const double rhs = closed_form(fn, s);
    const std::int64_t min_s = (fn == FunctionId::Zeta || fn == FunctionId::Lambda) ? 2 : 1;
    if (s < min_s) {
        throw UnsupportedValue(name + ": defining series does not converge");
    }
    const double sd = static_cast<double>(s);

    if (fn == FunctionId::Eta || fn == FunctionId::Beta) {
        const bool odd_only = fn == FunctionId::Beta;
        auto term = [sd, odd_only](std::int64_t u) {
            const double base = odd_only ? 2.0 * static_cast<double>(u) - 1.0 : static_cast<double>(u);
            const double mag = std::pow(base, -sd);
            return u % 2 == 1 ? mag : -mag;
        };
        const auto est = sum_alternating(term, cfg);
        return make_report(name, est.value, rhs, cfg.tolerance, est.terms_used, est.remainder_bound);
    }

    // zeta: sum_{n>=0} (n+1)^-s; lambda: sum_{n>=0} (2n+1)^-s. Direct summation,
    // smallest terms first, plus the Euler-Maclaurin tail.
    const std::int64_t n_terms = cfg.max_terms;
    const double alpha = fn == FunctionId::Zeta ? 1.0 : 2.0;
    double partial = 0.0;
    for (std::int64_t n = n_terms - 1; n >= 0; --n) {
        partial += std::pow(alpha * static_cast<double>(n) + 1.0, -sd);
    }
    const double tail = power_tail(n_terms, sd, alpha, 1.0);
    return make_report(name, partial + tail, rhs, cfg.tolerance, n_terms, tail);
}

std::string_view name_of(SineVariant v) { return v == SineVariant::Eq7 ? "eq7" : "eq10"; }

VerificationReport verify_sine_identity(unsigned k, double x, SineVariant variant, const NumericConfig& cfg) {
    cfg.validate();
    if (k > 6) {
        throw std::invalid_argument("sine identities are verified for k <= 6");
    }
    const double pi = pi_double();
    const std::string name = std::string(name_of(variant)) + " k=" + std::to_string(k) + " x=" + fmt_double(x);
    const double p = 2.0 * k + 1.0;
    const std::int64_t n_terms = cfg.max_terms;

    if (variant == SineVariant::Eq7) {
        if (!(x >= -pi && x <= pi)) {
            throw DomainViolation(name + ": requires -pi <= x <= pi");
        }
        std::vector<double> partials;
        partials.reserve(static_cast<std::size_t>(n_terms));
        double running = 0.0;
        for (std::int64_t u = 1; u <= n_terms; ++u) {
            const double ud = static_cast<double>(u);
            const double t = std::sin(ud * x) / std::pow(ud, p);
            running += u % 2 == 1 ? t : -t;
            partials.push_back(running);
        }
        const double series = averaged_tail(partials, cfg.acceleration_depth);

        // sum_{v=0}^{k} (-1)^v x^(2v+1)/(2v+1)! * eta(2(k-v)), eta(0) = 1/2
        double finite = 0.0;
        for (unsigned v = 0; v <= k; ++v) {
            const unsigned j = k - v;
            const double eta = j == 0 ? divergent_alt_power_sum(0).value().to_double() : to_float(eta_even(j));
            const double w = std::pow(x, 2.0 * v + 1.0) / Rational(factorial(2 * v + 1)).to_double();
            finite += (v % 2 == 0 ? w : -w) * eta;
        }
        const double bound = std::pow(static_cast<double>(n_terms), -p);
        return make_report(name, series, finite, cfg.tolerance, n_terms, bound);
    }

    if (!(x >= 0.0 && x <= 2.0 * pi)) {
        throw DomainViolation(name + ": requires 0 <= x <= 2pi");
    }
    if (k == 0) {
        throw DomainViolation(name + ": the k = 0 series converges too slowly for direct summation");
    }
    double series = 0.0;
    for (std::int64_t u = n_terms; u >= 1; --u) {
        const double ud = static_cast<double>(u);
        series += std::sin(ud * x) / std::pow(ud, p);
    }

    // (-1)^(k+1)/(2k+1)! sum_{u=0}^{k} (2^(2u-1) - 1) C(2k+1, 2u) (pi-x)^(2(k-u)+1) pi^(2u) B_2u
    double finite = 0.0;
    for (unsigned u = 0; u <= k; ++u) {
        const int two_u = 2 * static_cast<int>(u);
        Rational c = (pow2(two_u - 1) - Rational(1)) * Rational(binomial(2 * k + 1, 2 * u)) *
                     bernoulli_minus(2 * u) / Rational(factorial(2 * k + 1));
        if ((k + 1) % 2 == 1) c = -c;
        finite += c.to_double() * std::pow(pi - x, 2.0 * (k - u) + 1.0) * std::pow(pi, two_u);
    }
    // integral of u^-(2k+1) from N to infinity
    const double tail = std::pow(static_cast<double>(n_terms), -2.0 * k) / (2.0 * k);
    return make_report(name, series, finite, cfg.tolerance, n_terms, tail);
}

std::vector<double> sine_identity_grid(SineVariant variant) {
    const double pi = pi_double();
    std::vector<double> xs;
    if (variant == SineVariant::Eq7) {
        for (int i = 0; i < 20; ++i) {
            xs.push_back(i == 19 ? pi : -pi + 2.0 * pi * i / 19.0);
        }
    } else {
        xs.push_back(pi / 20.0);
        for (int i = 1; i <= 19; ++i) {
            xs.push_back(i == 5 ? pi / 2.0 : pi * i / 10.0);
        }
    }
    return xs;
}

namespace {

std::vector<VerificationReport> values_suite(const NumericConfig& cfg) {
    std::vector<VerificationReport> out;
    for (std::int64_t k = 1; k <= 5; ++k) {
        out.push_back(verify_value(FunctionId::Eta, 2 * k, cfg));
        out.push_back(verify_value(FunctionId::Zeta, 2 * k, cfg));
        out.push_back(verify_value(FunctionId::Lambda, 2 * k, cfg));
    }
    for (std::int64_t k = 0; k <= 4; ++k) {
        out.push_back(verify_value(FunctionId::Beta, 2 * k + 1, cfg));
    }
    return out;
}

std::vector<VerificationReport> identities_suite(const NumericConfig& cfg) {
    std::vector<VerificationReport> out;
    for (auto variant : {SineVariant::Eq7, SineVariant::Eq10}) {
        for (unsigned k = 1; k <= 3; ++k) {
            for (double x : sine_identity_grid(variant)) {
                out.push_back(verify_sine_identity(k, x, variant, cfg));
            }
        }
    }
    return out;
}

std::vector<VerificationReport> functional_suite(const NumericConfig& cfg) {
    std::vector<VerificationReport> out;
    for (unsigned k = 1; k <= 40; ++k) {
        char name[48];
        std::snprintf(name, sizeof name, "beta functional k=%02u", k);
        const bool exact = beta_functional_check(k);
        const unsigned s = 2 * k + 1;
        const double lhs = to_float(beta_neg_euler(2 * k));
        const Rational scale = pow2(static_cast<int>(s)) * (k % 2 == 0 ? Rational(1) : Rational(-1)) *
                               Rational(factorial(2 * k));
        const double rhs = (scale * beta_odd_euler(k).coefficient(s)).to_double();
        VerificationReport r = make_report(name, lhs, rhs, cfg.tolerance, 0, 0.0);
        // exact identity: any mismatch is a failure regardless of float closeness
        r.deviation = exact ? 0.0 : std::numeric_limits<double>::infinity();
        r.passed = exact;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

std::vector<VerificationReport> run_suite(std::string_view name, const NumericConfig& cfg) {
    cfg.validate();
    std::vector<VerificationReport> out;
    const bool all = name == "all";
    if (!all && name != "values" && name != "identities" && name != "functional-equation") {
        throw UnknownSuite("unknown suite '" + std::string(name) + "'");
    }
    auto append = [&out](std::vector<VerificationReport> part) {
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    };
    if (all || name == "values") append(values_suite(cfg));
    if (all || name == "identities") append(identities_suite(cfg));
    if (all || name == "functional-equation") append(functional_suite(cfg));
    std::stable_sort(out.begin(), out.end(),
                     [](const VerificationReport& a, const VerificationReport& b) { return a.name < b.name; });
    return out;
}

}  // namespace zetakit::numverify
