#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "zetakit/poly_parser.hpp"

using namespace zetakit;
using zetakit::expr::parse_polynomial;
using zetakit::expr::SyntaxError;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

std::size_t error_column(const char* src) {
    try {
        (void)parse_polynomial(src);
    } catch (const SyntaxError& e) {
        return e.column();
    }
    FAIL("expected a syntax error for '" << src << "'");
    return 0;
}

}  // namespace

TEST_CASE("documented inputs") {
    CHECK(parse_polynomial("u^2 + 3*u - 1/2") == Polynomial{q("-1/2"), Rational(3), Rational(1)});
    CHECK(parse_polynomial("-(u - 1)*(u + 1)") == Polynomial{Rational(1), Rational(0), Rational(-1)});
    CHECK(error_column("u^^2") == 3);
}

TEST_CASE("precedence and grouping") {
    CHECK(parse_polynomial("2*u^3") == Polynomial::monomial(3, Rational(2)));
    CHECK(parse_polynomial("(2*u)^3") == Polynomial::monomial(3, Rational(8)));
    CHECK(parse_polynomial("-u^2") == Polynomial::monomial(2, Rational(-1)));
    CHECK(parse_polynomial("1 - u - u") == Polynomial{Rational(1), Rational(-2)});
    CHECK(parse_polynomial("  3 /  4 * u ") == Polynomial{Rational(0), q("3/4")});
    CHECK(parse_polynomial("(u+1)^0") == Polynomial{Rational(1)});
    CHECK(parse_polynomial("0*u").is_zero());
    CHECK(parse_polynomial("((u))") == Polynomial::monomial(1));
}

TEST_CASE("syntax errors carry columns and expectations") {
    CHECK(error_column("u^2^3") == 4);
    CHECK(error_column("(u + 1") == 7);
    CHECK(error_column("2*-u") == 3);
    CHECK(error_column("") == 1);
    CHECK(error_column("u + x") == 5);
    CHECK(error_column("1/0") == 3);
    CHECK(error_column("u)") == 2);
    try {
        (void)parse_polynomial("(u + 1");
    } catch (const SyntaxError& e) {
        CHECK(e.expected() == std::vector<std::string>{"')'"});
        CHECK(std::string(e.what()).find("column 7") != std::string::npos);
    }
}

TEST_CASE("print/parse round trip") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> deg(0, 8);
    for (int i = 0; i < 100; ++i) {
        std::vector<Rational> c(deg(rng) + 1);
        for (auto& x : c) x = testing::random_rational(rng, 50);
        // sprinkle exact zeros and unit coefficients
        if (c.size() > 2) c[1] = Rational(0);
        if (c.size() > 3) c[2] = Rational(-1);
        const Polynomial p(std::move(c));
        CAPTURE(p.to_string());
        CHECK(parse_polynomial(p.to_string()) == p);
    }
}
