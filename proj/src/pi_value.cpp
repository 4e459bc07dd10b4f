#include "zetakit/pi_value.hpp"

#include <stdexcept>

namespace zetakit {

PiValue::PiValue(Rational rational) { add_term(0, rational); }

PiValue PiValue::term(Rational coeff, unsigned pi_power) {
    PiValue v;
    v.add_term(pi_power, coeff);
    return v;
}

bool PiValue::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

Rational PiValue::coefficient(unsigned pi_power) const {
    auto it = terms_.find(pi_power);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PiValue::add_term(unsigned power, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(power, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PiValue& PiValue::operator+=(const PiValue& o) {
    for (const auto& [m, q] : o.terms_) add_term(m, q);
    return *this;
}

PiValue& PiValue::operator-=(const PiValue& o) {
    for (const auto& [m, q] : o.terms_) add_term(m, -q);
    return *this;
}

PiValue& PiValue::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, q] : terms_) q *= c;
    return *this;
}

PiValue operator*(const PiValue& a, const PiValue& b) {
    PiValue out;
    for (const auto& [ma, qa] : a.terms_) {
        for (const auto& [mb, qb] : b.terms_) {
            out.add_term(ma + mb, qa * qb);
        }
    }
    return out;
}

PiValue PiValue::operator/(const Rational& c) const {
    PiValue out = *this;
    for (auto& [m, q] : out.terms_) q /= c;
    return out;
}

PiValue PiValue::divided_by_pi_power(unsigned m) const {
    PiValue out;
    for (const auto& [power, q] : terms_) {
        if (power < m) {
            throw std::domain_error("pi^" + std::to_string(power) + " term does not divide by pi^" +
                                    std::to_string(m));
        }
        out.terms_.emplace(power - m, q);
    }
    return out;
}

std::string PiValue::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [m, q] : terms_) {
        if (!out.empty()) out += " + ";
        if (m == 0) {
            out += q.to_string();
        } else {
            out += "(" + q.to_string() + ")*pi^" + std::to_string(m);
        }
    }
    return out;
}

}  // namespace zetakit
