#include "zetakit/exactnum.hpp"

namespace zetakit {

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt factorial(std::size_t n) {
    BigInt result = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

Rational BernoulliTable::operator[](std::size_t n) {
    std::lock_guard lock(mutex_);
    while (cache_.size() <= n) {
        const std::size_t m = cache_.size();
        Rational acc(0);
        for (std::size_t j = 0; j < m; ++j) {
            if (!cache_[j].is_zero()) {
                acc += Rational(binomial(m + 1, j)) * cache_[j];
            }
        }
        cache_.push_back(-acc / Rational(static_cast<std::int64_t>(m + 1)));
    }
    return cache_[n];
}

BigInt EulerTable::operator[](std::size_t n) {
    std::lock_guard lock(mutex_);
    while (cache_.size() <= n) {
        const std::size_t m = cache_.size();
        if (m % 2 == 1) {
            cache_.emplace_back(0);
            continue;
        }
        BigInt acc = 0;
        for (std::size_t j = 0; j < m; j += 2) {
            acc += binomial(m, j) * cache_[j];
        }
        cache_.push_back(-acc);
    }
    return cache_[n];
}

namespace {

BernoulliTable& bernoulli_table() {
    static BernoulliTable table;
    return table;
}

EulerTable& euler_table() {
    static EulerTable table;
    return table;
}

}  // namespace

Rational bernoulli_minus(std::size_t n) { return bernoulli_table()[n]; }

Rational bernoulli_plus(std::size_t n) {
    Rational b = bernoulli_minus(n);
    return n % 2 == 1 ? -b : b;
}

BigInt euler_number(std::size_t n) { return euler_table()[n]; }

Polynomial bernoulli_poly(std::size_t n) {
    std::vector<Rational> coeffs(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        coeffs[n - j] = Rational(binomial(n, j)) * bernoulli_minus(j);
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace zetakit
