#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "zetakit/polynomial.hpp"
#include "zetakit/rational.hpp"

namespace zetakit::testing {

inline Rational random_rational(std::mt19937_64& rng, std::int64_t max_abs) {
    std::uniform_int_distribution<std::int64_t> num(-max_abs, max_abs);
    std::uniform_int_distribution<std::int64_t> den(1, max_abs);
    return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

/// Degree exactly `degree` (leading coefficient forced nonzero).
inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t degree, std::int64_t max_abs = 10) {
    std::vector<Rational> c(degree + 1);
    for (auto& x : c) x = random_rational(rng, max_abs);
    while (c.back().is_zero()) c.back() = random_rational(rng, max_abs);
    return Polynomial(std::move(c));
}

}  // namespace zetakit::testing
