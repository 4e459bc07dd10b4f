#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zetakit/exactnum.hpp"
#include "zetakit/regsum.hpp"
#include "zetakit/values.hpp"

using namespace zetakit;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

PiValue pi_term(const char* c, unsigned m) { return PiValue::term(q(c), m); }

PiValue value_of(FunctionId fn, std::int64_t s) {
    auto r = eval(fn, s);
    REQUIRE(std::holds_alternative<PiValue>(r));
    return std::get<PiValue>(r);
}

Unsupported unsupported_of(FunctionId fn, std::int64_t s) {
    auto r = eval(fn, s);
    REQUIRE(std::holds_alternative<Unsupported>(r));
    return std::get<Unsupported>(r);
}

// zeta(2k) = (-1)^(k+1) B_2k (2pi)^(2k) / (2 (2k)!), the classical form.
PiValue zeta_even_classical(unsigned k) {
    const Rational sign = k % 2 == 1 ? Rational(1) : Rational(-1);
    return PiValue::term(sign * bernoulli_minus(2 * k) * pow2(2 * static_cast<int>(k)) /
                             (Rational(2) * Rational(factorial(2 * k))),
                         2 * k);
}

// The opening even-zeta display, sign (-1)^k, evaluated with B_2 = +1/6.
PiValue zeta_even_as_printed(unsigned k) {
    const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
    return PiValue::term(sign * pow2(2 * static_cast<int>(k) - 1) * bernoulli_minus(2 * k) /
                             Rational(factorial(2 * k)),
                         2 * k);
}

}  // namespace

TEST_CASE("PiValue arithmetic and printing") {
    const PiValue a = pi_term("1/12", 2) + PiValue(q("-1/2"));
    CHECK(a.to_string() == "-1/2 + (1/12)*pi^2");
    CHECK((a - a).is_zero());
    CHECK((a - a).to_string() == "0");
    CHECK(PiValue(Rational(3)).to_string() == "3");
    CHECK(pi_term("2", 3).to_string() == "(2)*pi^3");
    CHECK((pi_term("1/2", 1) * pi_term("1/3", 2)) == pi_term("1/6", 3));
    CHECK(pi_term("4", 5).divided_by_pi_power(5) == PiValue(Rational(4)));
    CHECK_THROWS_AS((void)(pi_term("4", 2) + PiValue(Rational(1))).divided_by_pi_power(1), std::domain_error);
    CHECK(PiValue(Rational(0)).is_zero());
    CHECK(PiValue(Rational(2)).is_rational());
    CHECK_FALSE(pi_term("1", 2).is_rational());
}

TEST_CASE("eta_even") {
    CHECK(eta_even(1) == pi_term("1/12", 2));
    CHECK(eta_even(2) == pi_term("7/720", 4));
    CHECK(eta_even(3) == pi_term("31/30240", 6));
    CHECK_THROWS_AS(eta_even(0), std::invalid_argument);
}

TEST_CASE("eta_even_recurrence") {
    CHECK(eta_even_recurrence(1) == pi_term("1/12", 2));
    CHECK(eta_even_recurrence(2) == pi_term("7/720", 4));
    for (unsigned k = 1; k <= 30; ++k) {
        CAPTURE(k);
        const PiValue v = eta_even_recurrence(k);
        CHECK(v.terms().size() == 1);
        CHECK(v == eta_even(k));
    }
}

TEST_CASE("zeta, lambda at even arguments") {
    CHECK(zeta_even(1) == pi_term("1/6", 2));
    CHECK(zeta_even(2) == pi_term("1/90", 4));
    CHECK(zeta_even(3) == pi_term("1/945", 6));
    CHECK(lambda_even(1) == pi_term("1/8", 2));
    CHECK(lambda_even(2) == pi_term("1/96", 4));
    for (unsigned k = 1; k <= 40; ++k) {
        CAPTURE(k);
        CHECK(zeta_even(k) == zeta_even_classical(k));
        CHECK(zeta_even(k) + eta_even(k) == Rational(2) * lambda_even(k));
        CHECK(eta_even(k).coefficient(2 * k) > Rational(0));
        CHECK(zeta_even(k).coefficient(2 * k) > Rational(0));
    }
}

TEST_CASE("the printed even-zeta display differs only in sign") {
    for (unsigned k = 1; k <= 20; ++k) {
        CHECK(zeta_even_as_printed(k) == Rational(-1) * zeta_even(k));
    }
}

TEST_CASE("non-positive arguments") {
    CHECK(zeta_neg(1) == PiValue(q("-1/12")));
    CHECK(zeta_neg(2).is_zero());
    CHECK(zeta_neg(3) == PiValue(q("1/120")));
    CHECK_THROWS_AS(zeta_neg(0), std::invalid_argument);
    CHECK(eta_neg(0) == PiValue(q("1/2")));
    CHECK(eta_neg(1) == PiValue(q("1/4")));
    CHECK(lambda_neg(1) == PiValue(q("1/12")));
    CHECK(lambda_neg(0).is_zero());
    for (unsigned k = 1; k <= 40; ++k) {
        CHECK(zeta_neg(k) == PiValue(divergent_power_sum(k).value()));
        CHECK(eta_neg(k) == PiValue(divergent_alt_power_sum(k).value()));
    }
}

TEST_CASE("beta at non-positive arguments") {
    CHECK(beta_neg_bernoulli(1) == PiValue(q("1/2")));
    CHECK(beta_neg_bernoulli(2).is_zero());
    CHECK(beta_neg_bernoulli(3) == PiValue(q("-1/2")));
    CHECK(beta_neg_euler(0) == PiValue(q("1/2")));
    CHECK(beta_neg_euler(2) == PiValue(q("-1/2")));
    CHECK(beta_neg_euler(1).is_zero());
    CHECK(beta_neg_euler(4) == PiValue(q("5/2")));
    for (unsigned k = 1; k <= 40; ++k) CHECK(beta_neg_bernoulli(k) == beta_neg_euler(k - 1));
}

TEST_CASE("beta at odd arguments") {
    CHECK(beta_odd_bernoulli(0) == pi_term("1/4", 1));
    CHECK(beta_odd_bernoulli(1) == pi_term("1/32", 3));
    CHECK(beta_odd_bernoulli(2) == pi_term("5/1536", 5));
    CHECK(beta_odd_euler(0) == pi_term("1/4", 1));
    CHECK(beta_odd_euler(1) == pi_term("1/32", 3));
    for (unsigned k = 0; k <= 40; ++k) CHECK(beta_odd_bernoulli(k) == beta_odd_euler(k));
}

TEST_CASE("beta functional equation") {
    for (unsigned k = 1; k <= 10; ++k) CHECK(beta_functional_check(k));
    CHECK_THROWS_AS(beta_functional_check(0), std::invalid_argument);
}

TEST_CASE("eval dispatch") {
    CHECK(value_of(FunctionId::Zeta, -1) == PiValue(q("-1/12")));
    CHECK(value_of(FunctionId::Zeta, 0) == PiValue(q("-1/2")));
    CHECK(value_of(FunctionId::Zeta, 2) == pi_term("1/6", 2));
    CHECK(value_of(FunctionId::Eta, 4) == pi_term("7/720", 4));
    CHECK(value_of(FunctionId::Eta, 0) == PiValue(q("1/2")));
    CHECK(value_of(FunctionId::Lambda, 2) == pi_term("1/8", 2));
    CHECK(value_of(FunctionId::Beta, 3) == pi_term("1/32", 3));
    CHECK(value_of(FunctionId::Beta, 0) == PiValue(q("1/2")));
    CHECK(value_of(FunctionId::Beta, -2) == PiValue(q("-1/2")));

    CHECK(unsupported_of(FunctionId::Zeta, 1).reason == UnsupportedReason::PoleAtOne);
    CHECK(unsupported_of(FunctionId::Zeta, 1).code() == "pole");
    CHECK(unsupported_of(FunctionId::Lambda, 1).reason == UnsupportedReason::PoleAtOne);
    CHECK(unsupported_of(FunctionId::Eta, 1).reason == UnsupportedReason::NoClosedForm);
    CHECK(unsupported_of(FunctionId::Zeta, 3).reason == UnsupportedReason::NoClosedForm);
    CHECK(unsupported_of(FunctionId::Eta, 5).reason == UnsupportedReason::NoClosedForm);
    CHECK(unsupported_of(FunctionId::Beta, 2).code() == "no-closed-form");
    CHECK(unsupported_of(FunctionId::Beta, 2).detail.find("beta(2)") != std::string::npos);

    for (std::int64_t k = 1; k <= 50; ++k) CHECK(value_of(FunctionId::Zeta, -2 * k).is_zero());
}

TEST_CASE("function names") {
    CHECK(parse_function("lambda") == FunctionId::Lambda);
    CHECK_FALSE(parse_function("gamma").has_value());
    CHECK(name_of(FunctionId::Beta) == "beta");
}
