#pragma once

#include <cstddef>
#include <mutex>
#include <vector>

#include "zetakit/polynomial.hpp"
#include "zetakit/rational.hpp"

namespace zetakit {

/// C(n, k); zero when k > n.
BigInt binomial(std::size_t n, std::size_t k);

BigInt factorial(std::size_t n);

/// Grow-only memo of Bernoulli numbers in the B_1 = -1/2 convention, built by
/// sum_{j=0}^{n} C(n+1, j) B_j = 0. Extension is serialized; reads of the
/// already-computed prefix hand out copies so callers never alias the cache.
class BernoulliTable {
public:
    Rational operator[](std::size_t n);

private:
    std::mutex mutex_;
    std::vector<Rational> cache_{Rational(1)};
};

/// Grow-only memo of Euler numbers via sum_{j even} C(n, j) E_j = 0.
class EulerTable {
public:
    BigInt operator[](std::size_t n);

private:
    std::mutex mutex_;
    std::vector<BigInt> cache_{BigInt(1)};
};

/// B_n with B_1 = -1/2.
Rational bernoulli_minus(std::size_t n);

/// B_n with B_1 = +1/2; equals (-1)^n B_n^-. This is the convention the
/// negative-argument formulas (zeta(-k), beta(1-k)) are written in.
Rational bernoulli_plus(std::size_t n);

/// E_n; zero for odd n.
BigInt euler_number(std::size_t n);

/// B_n(x) = sum_j C(n, j) B_j^- x^(n-j).
Polynomial bernoulli_poly(std::size_t n);

}  // namespace zetakit
