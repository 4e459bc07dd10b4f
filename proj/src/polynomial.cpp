#include "zetakit/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "zetakit/exactnum.hpp"

namespace zetakit {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::monomial(std::size_t power, Rational c) {
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = std::move(c);
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

std::size_t Polynomial::degree() const {
    if (coeffs_.empty()) {
        throw std::logic_error("degree of the zero polynomial is undefined");
    }
    return coeffs_.size() - 1;
}

Rational Polynomial::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) {
        a *= c;
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result{Rational(1)};
    Polynomial base = *this;
    for (unsigned e = exponent; e != 0; e >>= 1) {
        if (e & 1U) result = result * base;
        if (e > 1) base = base * base;
    }
    return result;
}

Polynomial Polynomial::shifted(const Rational& shift) const {
    // sum_i c_i (x+s)^i = sum_j x^j sum_{i>=j} c_i C(i,j) s^(i-j)
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        Rational s_pow(1);
        for (std::size_t j = i + 1; j-- > 0;) {
            out[j] += coeffs_[i] * Rational(binomial(i, j)) * s_pow;
            s_pow *= shift;
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::reflected() const {
    std::vector<Rational> out = coeffs_;
    for (std::size_t i = 1; i < out.size(); i += 2) {
        out[i] = -out[i];
    }
    return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        Rational mag = c.abs();
        bool unit = mag == Rational(1);
        if (i == 0 || !unit) {
            out += mag.to_string();
            if (i > 0) out += "*";
        }
        if (i == 1) {
            out += "u";
        } else if (i > 1) {
            out += "u^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace zetakit
