#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zetakit/pi_value.hpp"
#include "zetakit/rational.hpp"
#include "zetakit/values.hpp"

namespace zetakit::numverify {

class DigitsOutOfRange : public std::out_of_range {
    using std::out_of_range::out_of_range;
};
class NonAlternating : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
class DomainViolation : public std::domain_error {
    using std::domain_error::domain_error;
};
class UnknownSuite : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
/// No closed form to compare against, or the defining series diverges.
class UnsupportedValue : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericConfig {
    double tolerance = 1e-9;
    std::int64_t max_terms = 100000;
    int acceleration_depth = 12;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

struct VerificationReport {
    std::string name;
    double lhs = 0.0;  // series side
    double rhs = 0.0;  // closed-form side
    double deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::int64_t terms_used = 0;
    /// Estimate of what the truncated series leaves out (remainder or tail).
    double error_bound = 0.0;
};

constexpr int kMaxPiDigits = 100;

/// pi truncated to `digits` decimal places, 1 <= digits <= 100.
Rational pi_to_rational(int digits);

double to_float(const PiValue& v, int digits = 30);

struct SeriesEstimate {
    double value = 0.0;
    std::int64_t terms_used = 0;
    double raw_partial = 0.0;
    /// |term(N+1)|, the Leibniz bound on |limit - raw_partial|.
    double remainder_bound = 0.0;
};

/// Sums sum_{u>=1} term(u) for an alternating series. Partial sums are
/// smoothed by `acceleration_depth` rounds of neighbour averaging; the term
/// count doubles until two successive estimates agree or max_terms is hit.
/// Throws NonAlternating if the signs of the first 100 nonzero terms do not
/// alternate.
SeriesEstimate sum_alternating(const std::function<double(std::int64_t)>& term, const NumericConfig& cfg);

/// Compares the defining series of fn at s with the closed form from eval().
VerificationReport verify_value(FunctionId fn, std::int64_t s, const NumericConfig& cfg);

enum class SineVariant {
    Eq7,   // sum (-1)^(u-1) sin(ux)/u^(2k+1), -pi <= x <= pi
    Eq10,  // sum sin(ux)/u^(2k+1),            0 <= x <= 2pi, k >= 1
};

std::string_view name_of(SineVariant v);

/// Series side of a sine identity versus its finite Bernoulli/eta side.
VerificationReport verify_sine_identity(unsigned k, double x, SineVariant variant, const NumericConfig& cfg);

/// The fixed x samples used by the identities battery (20 per variant).
std::vector<double> sine_identity_grid(SineVariant variant);

/// Runs one of "values", "identities", "functional-equation", "all".
/// Reports come back sorted by name.
std::vector<VerificationReport> run_suite(std::string_view name, const NumericConfig& cfg);

}  // namespace zetakit::numverify
