#include "polysum/expr_parser.hpp"

#include <cctype>
#include <optional>
#include <utility>

namespace polysum::expr {

namespace {

enum class Tok { number, ident, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string_view text;
};

std::string describe(const Token& t)
{
    switch (t.kind) {
    case Tok::end:
        return "end of input";
    case Tok::number:
        return "number '" + std::string(t.text) + "'";
    case Tok::ident:
        return "identifier '" + std::string(t.text) + "'";
    default:
        return "'" + std::string(t.text) + "'";
    }
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
        const std::size_t start = pos_;
        if (pos_ >= src_.size()) {
            return {Tok::end, start, {}};
        }
        const auto c = static_cast<unsigned char>(src_[pos_]);
        if (std::isdigit(c)) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
            }
            return {Tok::number, start, src_.substr(start, pos_ - start)};
        }
        if (std::isalpha(c)) {
            while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
            }
            return {Tok::ident, start, src_.substr(start, pos_ - start)};
        }
        // U+2212 MINUS SIGN
        if (src_.substr(pos_, 3) == "\xE2\x88\x92") {
            pos_ += 3;
            return {Tok::minus, start, src_.substr(start, 3)};
        }
        ++pos_;
        const auto text = src_.substr(start, 1);
        switch (c) {
        case '+': return {Tok::plus, start, text};
        case '-': return {Tok::minus, start, text};
        case '*': return {Tok::star, start, text};
        case '^': return {Tok::caret, start, text};
        case '/': return {Tok::slash, start, text};
        case '(': return {Tok::lparen, start, text};
        case ')': return {Tok::rparen, start, text};
        default:
            throw ParseError(start, "unexpected character '" + std::string(text) + "'");
        }
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

NodePtr make(auto&& alternative)
{
    return std::make_unique<const Node>(Node{std::forward<decltype(alternative)>(alternative)});
}

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    PolyExpr run()
    {
        NodePtr root = expr();
        if (cur_.kind != Tok::end) {
            fail_expected("operator or end of input");
        }
        return PolyExpr(std::move(root), std::move(variable_));
    }

private:
    void advance() { cur_ = lexer_.next(); }

    [[noreturn]] void fail_expected(const std::string& expected) const
    {
        throw ParseError(cur_.offset, "expected " + expected + ", found " + describe(cur_));
    }

    NodePtr expr()
    {
        NodePtr lhs = term();
        while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
            const BinaryOp op = cur_.kind == Tok::plus ? BinaryOp::add : BinaryOp::sub;
            advance();
            lhs = make(Binary{op, std::move(lhs), term()});
        }
        return lhs;
    }

    NodePtr term()
    {
        bool literal_base = false;
        NodePtr lhs = factor(literal_base);
        while (true) {
            if (cur_.kind == Tok::star) {
                advance();
            } else if (literal_base && (cur_.kind == Tok::ident || cur_.kind == Tok::lparen)) {
                // implicit multiplication: 3x, 1/2(x+1)
            } else {
                break;
            }
            lhs = make(Binary{BinaryOp::mul, std::move(lhs), factor(literal_base)});
        }
        if (cur_.kind == Tok::slash) {
            throw UnsupportedConstruct(cur_.offset,
                                       "division is not supported; only literal fractions p/q");
        }
        return lhs;
    }

    NodePtr factor(bool& literal_base)
    {
        if (cur_.kind == Tok::minus) {
            advance();
            return make(Negate{factor(literal_base)});
        }
        return power(literal_base);
    }

    NodePtr power(bool& literal_base)
    {
        literal_base = cur_.kind == Tok::number;
        NodePtr base = atom();
        if (cur_.kind != Tok::caret) {
            return base;
        }
        advance();
        return make(Power{std::move(base), exponent()});
    }

    // uint ('^' uint)*, folded right to left.
    unsigned long exponent()
    {
        if (cur_.kind == Tok::minus) {
            throw UnsupportedConstruct(cur_.offset, "negative exponents are not supported");
        }
        if (cur_.kind != Tok::number) {
            if (cur_.kind == Tok::ident || cur_.kind == Tok::lparen) {
                throw UnsupportedConstruct(cur_.offset,
                                           "exponent must be a nonnegative integer literal");
            }
            fail_expected("nonnegative integer exponent");
        }
        const Token tok = cur_;
        advance();
        if (cur_.kind == Tok::slash) {
            throw UnsupportedConstruct(tok.offset, "exponent must be an integer, not a fraction");
        }
        const unsigned long base = to_exponent(tok);
        if (cur_.kind != Tok::caret) {
            return base;
        }
        advance();
        const unsigned long rest = exponent();
        const Integer value = pow(Integer(base), rest);
        if (value > kMaxExponent) {
            throw UnsupportedConstruct(tok.offset, "exponent exceeds "
                                                       + std::to_string(kMaxExponent));
        }
        return value.get_ui();
    }

    static unsigned long to_exponent(const Token& tok)
    {
        const Integer value(std::string(tok.text), 10);
        if (value > kMaxExponent) {
            throw UnsupportedConstruct(tok.offset, "exponent exceeds "
                                                       + std::to_string(kMaxExponent));
        }
        return value.get_ui();
    }

    NodePtr atom()
    {
        switch (cur_.kind) {
        case Tok::number: return literal();
        case Tok::ident: {
            const Token tok = cur_;
            if (variable_.empty()) {
                variable_ = std::string(tok.text);
            } else if (variable_ != tok.text) {
                throw UnsupportedConstruct(tok.offset, "second variable '" + std::string(tok.text)
                                                           + "' after '" + variable_
                                                           + "'; only one variable is allowed");
            }
            advance();
            return make(Variable{std::string(tok.text)});
        }
        case Tok::lparen: {
            advance();
            NodePtr inner = expr();
            if (cur_.kind != Tok::rparen) {
                fail_expected("')'");
            }
            advance();
            return inner;
        }
        default: fail_expected("number, variable or '('");
        }
    }

    NodePtr literal()
    {
        const Token num = cur_;
        advance();
        if (cur_.kind != Tok::slash) {
            return make(Literal{Rational(Integer(std::string(num.text), 10))});
        }
        advance();
        if (cur_.kind != Tok::number) {
            if (cur_.kind == Tok::ident || cur_.kind == Tok::lparen) {
                throw UnsupportedConstruct(cur_.offset,
                                           "division is not supported; only literal fractions p/q");
            }
            fail_expected("denominator");
        }
        const Token den = cur_;
        const Integer d(std::string(den.text), 10);
        if (sgn(d) == 0) {
            throw ParseError(den.offset, "zero denominator in literal");
        }
        advance();
        return make(Literal{Rational(Integer(std::string(num.text), 10), d)});
    }

    Lexer lexer_;
    Token cur_{Tok::end, 0, {}};
    std::string variable_;
};

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

// Shared bottom-up walk; Value needs +, -, * and a power function.
template <class Value, class Leaf, class Pow>
Value fold(const Node& node, const Leaf& leaf, const Pow& power)
{
    return std::visit(
        Overloaded{
            [&](const Literal& l) { return leaf(l); },
            [&](const Variable& v) { return leaf(v); },
            [&](const Negate& n) { return -fold<Value>(*n.operand, leaf, power); },
            [&](const Binary& b) {
                Value lhs = fold<Value>(*b.lhs, leaf, power);
                Value rhs = fold<Value>(*b.rhs, leaf, power);
                switch (b.op) {
                case BinaryOp::add: return Value(lhs + rhs);
                case BinaryOp::sub: return Value(lhs - rhs);
                case BinaryOp::mul: break;
                }
                return Value(lhs * rhs);
            },
            [&](const Power& p) { return power(fold<Value>(*p.base, leaf, power), p.exponent); },
        },
        node.value);
}

Polynomial poly_pow(Polynomial base, unsigned long exponent)
{
    Polynomial result = Polynomial::constant(1);
    while (exponent > 0) {
        if (exponent & 1UL) {
            result *= base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

}  // namespace

PolyExpr parse(std::string_view src) { return Parser(src).run(); }

Polynomial lower(const PolyExpr& e)
{
    return fold<Polynomial>(
        e.root(),
        Overloaded{
            [](const Literal& l) { return Polynomial::constant(l.value); },
            [](const Variable&) { return Polynomial::identity(); },
        },
        poly_pow);
}

Rational interpret(const PolyExpr& e, const Rational& t)
{
    return fold<Rational>(
        e.root(),
        Overloaded{
            [](const Literal& l) { return l.value; },
            [&](const Variable&) { return t; },
        },
        [](const Rational& base, unsigned long exponent) { return pow(base, Integer(exponent)); });
}

Polynomial parse_polynomial(std::string_view src) { return lower(parse(src)); }

}  // namespace polysum::expr
