#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "polysum/poly.hpp"

namespace polysum::expr {

struct Node;
using NodePtr = std::unique_ptr<const Node>;

struct Literal {
    Rational value;
};

struct Variable {
    std::string name;
};

struct Negate {
    NodePtr operand;
};

enum class BinaryOp { add, sub, mul };

struct Binary {
    BinaryOp op;
    NodePtr lhs;
    NodePtr rhs;
};

/// base ^ exponent, exponent always a nonnegative integer literal.
struct Power {
    NodePtr base;
    unsigned long exponent;
};

struct Node {
    std::variant<Literal, Variable, Negate, Binary, Power> value;
};

/// Parsed univariate polynomial expression. variable() is empty when the
/// expression contains no variable at all.
class PolyExpr {
public:
    PolyExpr(NodePtr root, std::string variable)
        : root_(std::move(root)), variable_(std::move(variable)) {}

    const Node& root() const { return *root_; }
    const std::string& variable() const { return variable_; }

private:
    NodePtr root_;
    std::string variable_;
};

/// Largest exponent the parser accepts.
inline constexpr unsigned long kMaxExponent = 100000;

/// Grammar, lowest precedence first:
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | <implicit>) factor)*
///   factor := '-'* power
///   power  := atom ('^' uint)*        right-associative
///   atom   := uint | uint '/' uint | identifier | '(' expr ')'
/// Implicit multiplication applies after a factor whose atom is a numeric
/// literal ("3x", "1/2(x+1)"). "-x^2" is -(x^2).
///
/// Throws ParseError on syntax errors and UnsupportedConstruct on negative
/// or non-literal exponents, on division, and on a second variable name.
PolyExpr parse(std::string_view src);

/// Bottom-up evaluation in the polynomial ring.
Polynomial lower(const PolyExpr& e);

/// Direct evaluation of the tree at x = t, without building a polynomial.
Rational interpret(const PolyExpr& e, const Rational& t);

/// lower(parse(src)).
Polynomial parse_polynomial(std::string_view src);

}  // namespace polysum::expr
