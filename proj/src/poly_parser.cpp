#include "zetakit/poly_parser.hpp"

#include <cctype>

namespace zetakit::expr {

namespace {

enum class Tok { Number, Slash, Var, LParen, RParen, Plus, Minus, Star, Caret, End };

struct Token {
    Tok kind;
    std::size_t column;
    std::string_view text;
};

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += i + 1 == items.size() ? " or " : ", ";
        out += items[i];
    }
    return out;
}

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        const std::size_t col = i + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::Number, col, src.substr(i, j - i)});
            i = j;
            continue;
        }
        Tok kind;
        switch (c) {
            case '/': kind = Tok::Slash; break;
            case 'u': kind = Tok::Var; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '^': kind = Tok::Caret; break;
            default:
                throw SyntaxError(col, "unexpected character '" + std::string(1, c) + "'", {});
        }
        out.push_back({kind, col, src.substr(i, 1)});
        ++i;
    }
    out.push_back({Tok::End, src.size() + 1, {}});
    return out;
}

NodePtr make(auto value) { return std::make_unique<Node>(Node{std::move(value)}); }

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

    NodePtr parse_all() {
        NodePtr root = parse_expr();
        if (peek().kind != Tok::End) {
            fail("unexpected token '" + std::string(peek().text) + "'", {"'+'", "'-'", "'*'", "end of input"});
        }
        return root;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const {
        throw SyntaxError(peek().column, message, std::move(expected));
    }

    NodePtr parse_expr() {
        bool negate = false;
        if (peek().kind == Tok::Minus) {
            advance();
            negate = true;
        }
        NodePtr lhs = parse_term();
        if (negate) lhs = make(Negate{std::move(lhs)});
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const auto op = advance().kind == Tok::Plus ? Binary::Op::Add : Binary::Op::Sub;
            lhs = make(Binary{op, std::move(lhs), parse_term()});
        }
        return lhs;
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        while (peek().kind == Tok::Star) {
            advance();
            lhs = make(Binary{Binary::Op::Mul, std::move(lhs), parse_factor()});
        }
        return lhs;
    }

    NodePtr parse_factor() {
        NodePtr base = parse_base();
        if (peek().kind != Tok::Caret) return base;
        advance();
        if (peek().kind != Tok::Number) {
            fail("exponent must be an unsigned integer", {"unsigned integer"});
        }
        const Token& exp_tok = peek();
        const Rational exp = Rational::parse(exp_tok.text);
        if (exp > Rational(static_cast<std::int64_t>(kMaxExponent))) {
            fail("exponent exceeds " + std::to_string(kMaxExponent), {"unsigned integer"});
        }
        advance();
        if (peek().kind == Tok::Caret) {
            fail("'^' is non-associative; parenthesize the base", {"'*'", "'+'", "'-'", "')'", "end of input"});
        }
        return make(Power{std::move(base), static_cast<unsigned>(exp.numerator().convert_to<unsigned long>())});
    }

    NodePtr parse_base() {
        switch (peek().kind) {
            case Tok::Number: {
                const Rational num = Rational::parse(advance().text);
                if (peek().kind != Tok::Slash) return make(Literal{num});
                advance();
                if (peek().kind != Tok::Number) {
                    fail("expected denominator", {"unsigned integer"});
                }
                const Rational den = Rational::parse(peek().text);
                if (den.is_zero()) {
                    fail("zero denominator", {"nonzero unsigned integer"});
                }
                advance();
                return make(Literal{num / den});
            }
            case Tok::Var:
                advance();
                return make(Variable{});
            case Tok::LParen: {
                advance();
                NodePtr inner = parse_expr();
                if (peek().kind != Tok::RParen) {
                    fail("unbalanced parenthesis", {"')'"});
                }
                advance();
                return make(Group{std::move(inner)});
            }
            default:
                fail(peek().kind == Tok::End ? "unexpected end of input"
                                             : "unexpected token '" + std::string(peek().text) + "'",
                     {"number", "'u'", "'('"});
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

SyntaxError::SyntaxError(std::size_t column, std::string message, std::vector<std::string> expected)
    : std::runtime_error("column " + std::to_string(column) + ": " + message +
                         (expected.empty() ? std::string() : " (expected " + join(expected) + ")")),
      column_(column),
      expected_(std::move(expected)) {}

NodePtr parse(std::string_view src) { return Parser(src).parse_all(); }

Polynomial lower(const Node& node) {
    struct Visitor {
        Polynomial operator()(const Literal& l) const { return Polynomial{l.value}; }
        Polynomial operator()(const Variable&) const { return Polynomial::monomial(1); }
        Polynomial operator()(const Negate& n) const { return -lower(*n.operand); }
        Polynomial operator()(const Group& g) const { return lower(*g.inner); }
        Polynomial operator()(const Binary& b) const {
            Polynomial lhs = lower(*b.lhs);
            Polynomial rhs = lower(*b.rhs);
            switch (b.op) {
                case Binary::Op::Add: return lhs + rhs;
                case Binary::Op::Sub: return lhs - rhs;
                case Binary::Op::Mul: return lhs * rhs;
            }
            return {};
        }
        Polynomial operator()(const Power& p) const { return lower(*p.base).pow(p.exponent); }
    };
    return std::visit(Visitor{}, node.value);
}

Polynomial parse_polynomial(std::string_view src) { return lower(*parse(src)); }

}  // namespace zetakit::expr
