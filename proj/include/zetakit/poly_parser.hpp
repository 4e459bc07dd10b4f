#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zetakit/polynomial.hpp"
#include "zetakit/rational.hpp"

namespace zetakit::expr {

// Grammar, whitespace allowed between tokens:
//
//   expr     := ['-'] term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ['^' uint]
//   base     := rational | 'u' | '(' expr ')'
//   rational := uint ['/' uint]

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Literal {
    Rational value;
};
struct Variable {};
struct Negate {
    NodePtr operand;
};
struct Group {
    NodePtr inner;
};
struct Binary {
    enum class Op { Add, Sub, Mul };
    Op op;
    NodePtr lhs;
    NodePtr rhs;
};
struct Power {
    NodePtr base;
    unsigned exponent;
};

struct Node {
    std::variant<Literal, Variable, Negate, Group, Binary, Power> value;
};

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t column, std::string message, std::vector<std::string> expected);

    /// 1-based; one past the last character for end-of-input errors.
    std::size_t column() const { return column_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t column_;
    std::vector<std::string> expected_;
};

constexpr unsigned kMaxExponent = 1024;

NodePtr parse(std::string_view src);

Polynomial lower(const Node& node);

/// parse() followed by lower().
Polynomial parse_polynomial(std::string_view src);

}  // namespace zetakit::expr
