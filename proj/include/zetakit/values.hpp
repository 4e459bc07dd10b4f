#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "zetakit/pi_value.hpp"

namespace zetakit {

enum class FunctionId { Zeta, Eta, Lambda, Beta };

std::string_view name_of(FunctionId fn);
std::optional<FunctionId> parse_function(std::string_view name);

// Closed forms at integer arguments. Each family has a second, independent
// derivation so the two can be checked against each other exactly.

/// eta(2k) = (-1)^(k-1) (2^(2k-1) - 1) B_2k pi^(2k) / (2k)!,  k >= 1.
PiValue eta_even(unsigned k);

/// eta(2k) from the sine-series identity at x = pi,
///   0 = sum_{v=0}^{k} (-1)^v pi^(2v)/(2v+1)! * eta(2(k-v)),
/// seeded with the method value eta(0) = 1/2.
PiValue eta_even_recurrence(unsigned k);

PiValue zeta_even(unsigned k);
PiValue lambda_even(unsigned k);

/// zeta(-k) = -B^+_{k+1}/(k+1), k >= 1.
PiValue zeta_neg(unsigned k);
/// eta(-k), k >= 0.
PiValue eta_neg(unsigned k);
/// lambda(-k), k >= 0.
PiValue lambda_neg(unsigned k);

/// beta(1-k) = -(1/2k) sum_{u=1}^{k} (-1)^u 2^u (2^u - 1) C(k,u) B^+_u,  k >= 1.
PiValue beta_neg_bernoulli(unsigned k);
/// beta(-k) = E_k / 2.
PiValue beta_neg_euler(unsigned k);

/// beta(2k+1) from the sine series at x = pi/2 (Bernoulli numbers).
PiValue beta_odd_bernoulli(unsigned k);
/// beta(2k+1) = (-1)^k E_2k pi^(2k+1) / (2^(2k+2) (2k)!).
PiValue beta_odd_euler(unsigned k);

/// Exact check of beta(1-s) = (2/pi)^s sin(pi s/2) Gamma(s) beta(s) at
/// s = 2k+1, where the pi powers cancel.
bool beta_functional_check(unsigned k);

enum class UnsupportedReason { PoleAtOne, NoClosedForm };

struct Unsupported {
    UnsupportedReason reason;
    std::string detail;

    /// "pole" or "no-closed-form".
    std::string_view code() const;
};

using EvalResult = std::variant<PiValue, Unsupported>;

EvalResult eval(FunctionId fn, std::int64_t s);

}  // namespace zetakit
